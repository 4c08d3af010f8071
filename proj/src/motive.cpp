#include "mw/motive.hpp"

#include <algorithm>
#include <stdexcept>

#include "mw/schubert.hpp"
#include "mw/tableau.hpp"

namespace mw {

void MotiveDecomposition::add(SummandKind kind, int weight, long count) {
    if (count == 0) return;
    summands[Summand{kind, weight}] += count;
    if (summands[Summand{kind, weight}] == 0) summands.erase(Summand{kind, weight});
}

long MotiveDecomposition::count(SummandKind kind, int weight) const {
    auto it = summands.find(Summand{kind, weight});
    return it == summands.end() ? 0 : it->second;
}

long MotiveDecomposition::total_rank() const {
    long total = 0;
    for (const auto& [s, c] : summands) total += (s.kind == SummandKind::unit ? 1 : 2) * c;
    return total;
}

static int top_weight(const MotiveDecomposition& d) {
    int top = -1;
    for (const auto& [s, c] : d.summands) top = std::max(top, s.weight);
    return top;
}

std::vector<long> MotiveDecomposition::unit_counts() const {
    std::vector<long> w(top_weight(*this) + 1, 0);
    for (const auto& [s, c] : summands)
        if (s.kind == SummandKind::unit) w[s.weight] += c;
    return w;
}

std::vector<long> MotiveDecomposition::cone_counts() const {
    std::vector<long> t(top_weight(*this) + 1, 0);
    for (const auto& [s, c] : summands)
        if (s.kind == SummandKind::eta_cone) t[s.weight] += c;
    return t;
}

std::vector<long> MotiveDecomposition::chow_ranks() const {
    std::vector<long> s(top_weight(*this) + 2, 0);
    for (const auto& [sm, c] : summands) {
        if (sm.kind == SummandKind::unit) {
            s[sm.weight] += c;
        } else {
            s[sm.weight] += c;
            s[sm.weight + 1] += c;
        }
    }
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

MotiveDecomposition decompose_grassmannian(int k, int n, Twist twist) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("decompose_grassmannian: need 0 <= k <= n");
    const Truncation tr = Truncation::box(k, n);
    const int shift = twist == Twist::twisted ? 1 : 0;

    MotiveDecomposition d;
    d.twist = twist;
    d.thom_shifted = shift == 1;
    d.label = twist == Twist::twisted ? "Th(O-Gr(" + std::to_string(k) + "," + std::to_string(n) + ")(1))"
                                      : "Z(Gr(" + std::to_string(k) + "," + std::to_string(n) + "))";

    for (const auto& list : enumerate_tableaux(tr, twist))
        for (const Tableau& t : list)
            if (classify(t, tr).even) d.add(SummandKind::unit, t.shape.degree() + shift);
    for (const EtaIndex& e : eta_indices(tr, twist))
        d.add(SummandKind::eta_cone, e.shape.degree() + shift);
    return d;
}

std::set<int> witt_weights(const MotiveDecomposition& d) {
    std::set<int> ww;
    for (const auto& [s, c] : d.summands)
        if (s.kind == SummandKind::unit && c > 0) ww.insert(s.weight);
    return ww;
}

std::vector<long> eta_from_counts(const std::vector<long>& s, const std::vector<long>& w) {
    // t_j + t_{j-1} = s_j - w_j, solved forward; the tail must die out
    const int top = static_cast<int>(std::max(s.size(), w.size()));
    std::vector<long> t(top + 1, 0);
    long prev = 0;
    for (int j = 0; j <= top; ++j) {
        long sj = j < static_cast<int>(s.size()) ? s[j] : 0;
        long wj = j < static_cast<int>(w.size()) ? w[j] : 0;
        long tj = sj - wj - prev;
        if (tj < 0) throw std::domain_error("eta_from_counts: negative multiplicity, not a split motive");
        t[j] = tj;
        prev = tj;
    }
    if (t[top] != 0) throw std::domain_error("eta_from_counts: counts do not terminate");
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

std::vector<RealizationRow> realization_report(int k, int n) {
    MotiveDecomposition d = decompose_grassmannian(k, n, Twist::untwisted);
    std::vector<long> w = d.unit_counts();
    std::vector<long> t = d.cone_counts();
    std::vector<long> s = degree_counts(Truncation::box(k, n), Twist::untwisted);
    auto at = [](const std::vector<long>& v, int i) {
        return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : 0L;
    };
    std::vector<RealizationRow> rows;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        RealizationRow r;
        r.degree = i;
        r.free_rank = at(w, i);
        r.torsion_rank = at(t, i - 1);
        r.chow_rank = s[i];
        r.consistent = s[i] == at(w, i) + at(t, i) + at(t, i - 1);
        rows.push_back(r);
    }
    return rows;
}

// ---- recursions -------------------------------------------------------

static MotiveDecomposition motive_zero() { return MotiveDecomposition{}; }

static bool valid_gr(int k, int n) { return k >= 0 && n >= 0 && k <= n; }

static MotiveDecomposition shifted(const MotiveDecomposition& d, int m) {
    MotiveDecomposition out;
    for (const auto& [s, c] : d.summands) out.add(s.kind, s.weight + m, c);
    return out;
}

static MotiveDecomposition direct_sum(const MotiveDecomposition& a, const MotiveDecomposition& b) {
    MotiveDecomposition out = a;
    for (const auto& [s, c] : b.summands) out.add(s.kind, s.weight, c);
    return out;
}

static MotiveDecomposition motive_Z(int k, int n) {
    return valid_gr(k, n) ? decompose_grassmannian(k, n, Twist::untwisted) : motive_zero();
}

static MotiveDecomposition motive_Th(int k, int n) {
    return valid_gr(k, n) ? decompose_grassmannian(k, n, Twist::twisted) : motive_zero();
}

// Z(Gr(k,n))/eta((m)): one eta-cone per truncated tableau, shifted by m.
static MotiveDecomposition eta_quotient(int k, int n, int m) {
    MotiveDecomposition out;
    if (!valid_gr(k, n)) return out;
    std::vector<long> counts = degree_counts(Truncation::box(k, n), Twist::untwisted);
    for (int d = 0; d < static_cast<int>(counts.size()); ++d)
        out.add(SummandKind::eta_cone, d + m, counts[d]);
    return out;
}

bool recursion_check(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("recursion_check: need 1 <= k <= n");
    bool ok = true;
    const bool k_even = k % 2 == 0, n_even = n % 2 == 0;

    // twisted object
    if (!k_even && n_even) {
        // Th(O(1)) = Th(O_{k-2,n-2}(1))((2n-2k)) + Th(O_{k,n-2}(1))
        //          + Z(Gr(k-1,n-2))/eta((n-k))
        MotiveDecomposition rhs = direct_sum(
            direct_sum(shifted(motive_Th(k - 2, n - 2), 2 * n - 2 * k), motive_Th(k, n - 2)),
            eta_quotient(k - 1, n - 2, n - k));
        ok = ok && motive_Th(k, n).same_summands(rhs);
    } else if ((n - k) % 2 == 0) {
        // Th(O(1)) = Th(O_{k,n-1}(1)) + Z(Gr(k-1,n-1))((n-k+1))
        MotiveDecomposition rhs =
            direct_sum(motive_Th(k, n - 1), shifted(motive_Z(k - 1, n - 1), n - k + 1));
        ok = ok && motive_Th(k, n).same_summands(rhs);
    } else {
        // k even, n odd: Th(O(1)) = Th(O_{k-1,n-1}(1)) + Z(Gr(k,n-1))((k+1))
        MotiveDecomposition rhs =
            direct_sum(motive_Th(k - 1, n - 1), shifted(motive_Z(k, n - 1), k + 1));
        ok = ok && motive_Th(k, n).same_summands(rhs);
    }

    // untwisted object
    if ((n - k) % 2 == 1) {
        // Z(Gr(k,n)) = Z(Gr(k,n-1)) + Th(O_{k-1,n-1}(1))((n-k-1))
        MotiveDecomposition rhs =
            direct_sum(motive_Z(k, n - 1), shifted(motive_Th(k - 1, n - 1), n - k - 1));
        ok = ok && motive_Z(k, n).same_summands(rhs);
    } else {
        // Z(Gr(k,n)) = Z(Gr(k-1,n-1)) + Th(O_{k,n-1}(1))((k-1))
        MotiveDecomposition rhs =
            direct_sum(motive_Z(k - 1, n - 1), shifted(motive_Th(k, n - 1), k - 1));
        ok = ok && motive_Z(k, n).same_summands(rhs);
    }
    return ok;
}

bool witt_weight_constraints_ok(int k, int n, Twist twist) {
    MotiveDecomposition d = decompose_grassmannian(k, n, twist);
    std::set<int> ww = witt_weights(d);
    const bool k_even = k % 2 == 0, n_even = n % 2 == 0;
    auto in_class = [](int w, int r) { return (w - r) % 4 == 0; };

    if (twist == Twist::twisted) {
        if (!k_even && n_even) return ww.empty();
        if ((n - k) % 2 == 0) {
            for (int w : ww) {
                bool allowed = in_class(w, n - k + 1) || (k_even && in_class(w, k + 1));
                if (!allowed) return false;
            }
            return true;
        }
        // k even, n odd
        for (int w : ww)
            if (!in_class(w, k + 1)) return false;
        return true;
    }

    if ((n - k) % 2 == 1) {
        for (int w : ww) {
            bool allowed = in_class(w, 0) || (!k_even && in_class(w, n - 1));
            if (!allowed) return false;
        }
        return true;
    }
    for (int w : ww)
        if (!in_class(w, 0)) return false;
    return true;
}

// ---- complete flags ----------------------------------------------------

std::vector<int> flag_generator_degrees(int n) {
    std::vector<int> degs;
    for (int a = 1; a <= n / 2; ++a) {
        if (n % 2 == 0 && a == n / 2)
            degs.push_back(n - 1);
        else
            degs.push_back(4 * a - 1);
    }
    return degs;
}

std::vector<long> flag_chow_ranks(int n) {
    // coefficients of [n]_q! = prod_i (1 + q + ... + q^{i-1})
    std::vector<long> s{1};
    for (int i = 2; i <= n; ++i) {
        std::vector<long> next(s.size() + i - 1, 0);
        for (std::size_t j = 0; j < s.size(); ++j)
            for (int r = 0; r < i; ++r) next[j + r] += s[j];
        s = std::move(next);
    }
    return s;
}

MotiveDecomposition flag_motive(int n) {
    if (n < 1) throw std::invalid_argument("flag_motive: need n >= 1");
    std::vector<int> degs = flag_generator_degrees(n);
    MotiveDecomposition d;
    d.label = "Z(Fl(" + std::to_string(n) + "))";
    // all subsets of the generators, the empty one included
    for (unsigned bits = 0; bits < (1u << degs.size()); ++bits) {
        int weight = 0;
        for (std::size_t i = 0; i < degs.size(); ++i)
            if (bits & (1u << i)) weight += degs[i];
        d.add(SummandKind::unit, weight);
    }
    std::vector<long> t = eta_from_counts(flag_chow_ranks(n), d.unit_counts());
    for (int j = 0; j < static_cast<int>(t.size()); ++j) d.add(SummandKind::eta_cone, j, t[j]);
    return d;
}

}  // namespace mw
