#include "mw/cycle.hpp"

#include <stdexcept>

#include "mw/tableau.hpp"

namespace mw {

Cycle cycle_zero(Ring ring, Twist twist, const Truncation& tr) {
    return Cycle{ring, twist, tr, {}};
}

void cycle_accumulate(Cycle& c, const Shape& s, const Int& coef) {
    if (!c.tr.admissible(s))
        throw std::invalid_argument("shape " + s.str() + " not admissible for the cycle's truncation");
    Int v = ring_normalize(c.ring, coef);
    if (v == 0) return;
    Int& slot = c.terms[s];
    slot = ring_normalize(c.ring, slot + v);
    if (slot == 0) c.terms.erase(s);
}

Cycle sigma(const Shape& s, Ring ring, Twist twist, const Truncation& tr, const Int& coef) {
    Cycle c = cycle_zero(ring, twist, tr);
    cycle_accumulate(c, s, coef);
    return c;
}

static void require_compatible(const Cycle& a, const Cycle& b) {
    if (a.ring != b.ring || a.twist != b.twist || !(a.tr == b.tr))
        throw std::invalid_argument("cycles live in different contexts");
}

Cycle cycle_add(const Cycle& a, const Cycle& b) {
    require_compatible(a, b);
    Cycle out = a;
    for (const auto& [s, v] : b.terms) cycle_accumulate(out, s, v);
    return out;
}

Cycle cycle_scale(const Cycle& a, const Int& k) {
    Cycle out = cycle_zero(a.ring, a.twist, a.tr);
    for (const auto& [s, v] : a.terms) cycle_accumulate(out, s, v * k);
    return out;
}

bool cycle_is_zero(const Cycle& a) { return a.terms.empty(); }

Cycle reduce_mod2(const Cycle& a) {
    Cycle out = cycle_zero(Ring::mod2, a.twist, a.tr);
    for (const auto& [s, v] : a.terms) cycle_accumulate(out, s, v);
    return out;
}

int cycle_degree(const Cycle& a) {
    int d = -1;
    for (const auto& [s, v] : a.terms) {
        if (d < 0)
            d = s.degree();
        else if (d != s.degree())
            return -1;
    }
    return d;
}

std::string cycle_str(const Cycle& a) {
    if (a.terms.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : a.terms) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.str() + "*";
        out += "s" + s.str();
    }
    return out;
}

bool congruent_mod2(const Cycle& a, const Cycle& b) {
    Cycle diff = cycle_add(reduce_mod2(a), reduce_mod2(b));  // char 2: sum = difference
    return cycle_is_zero(diff);
}

Cycle sq2(const Cycle& c) {
    Cycle out = cycle_zero(c.ring, c.twist, c.tr);
    for (const auto& [s, v] : c.terms)
        for (const Shape& up : add_shapes(Tableau{s, c.twist}, c.tr)) cycle_accumulate(out, up, v);
    return out;
}

Cycle truncate_cycle(const Cycle& c, const Truncation& tr) {
    if (!c.tr.refines(tr))
        throw std::invalid_argument("truncation target must be at least as restrictive");
    Cycle out = cycle_zero(c.ring, c.twist, tr);
    for (const auto& [s, v] : c.terms)
        if (tr.admissible(s)) cycle_accumulate(out, s, v);
    return out;
}

}  // namespace mw
