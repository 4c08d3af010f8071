#include "mw/chow_witt.hpp"

#include <algorithm>
#include <stdexcept>

#include "mw/motive.hpp"

namespace mw {

EtaClass make_eta_class(Cycle a, Cycle b) {
    if (a.ring != Ring::integral || b.ring != Ring::integral)
        throw std::invalid_argument("eta classes are pairs of integral cycles");
    if (a.twist != b.twist || !(a.tr == b.tr))
        throw std::invalid_argument("eta class components live in different contexts");
    int da = cycle_degree(a), db = cycle_degree(b);
    if ((!cycle_is_zero(a) && da < 0) || (!cycle_is_zero(b) && db < 0))
        throw std::invalid_argument("eta class components must be homogeneous");
    if (!cycle_is_zero(a) && !cycle_is_zero(b) && db != da + 1)
        throw std::invalid_argument("eta class components must sit in adjacent degrees");
    if (!congruent_mod2(sq2(a), b))
        throw std::invalid_argument("eta class violates Sq2(a) = b (mod 2)");
    return EtaClass{std::move(a), std::move(b)};
}

EtaClass eta_identity(const Truncation& tr) {
    return EtaClass{sigma(Shape{}, Ring::integral, Twist::untwisted, tr),
                    cycle_zero(Ring::integral, Twist::untwisted, tr)};
}

EtaClass eta_mul(const EtaClass& u, const EtaClass& v) {
    if (!(u.a.tr == v.a.tr))
        throw std::invalid_argument("eta_mul: incompatible truncations");
    Cycle ac = schubert_product(u.a, v.a);
    Cycle bc = schubert_product(u.b, v.a);
    Cycle ad = schubert_product(u.a, v.b);
    return make_eta_class(ac, cycle_add(bc, ad));
}

EtaClass eta_class_of(const Tableau& root, const Truncation& tr, const std::vector<int>& subset) {
    TableauClass cls = classify(root, tr);
    if (!cls.irredundant || cls.full)
        throw std::invalid_argument("eta classes exist for irredundant-not-full tableaux only");
    for (int p : subset)
        if (p <= 1) throw std::invalid_argument("eta index positions must be > 1");
    Tableau grown = add_boxes(root, tr, subset);
    Cycle a = sigma(grown.shape, Ring::integral, root.twist, tr);
    return make_eta_class(a, sq2(a));
}

std::vector<Shape> BasisTable::gw_column() const {
    std::vector<Shape> out;
    for (const auto& [d, tags] : by_degree)
        for (const GeneratorTag& t : tags)
            if (t.kind == GenKind::gw_even) out.push_back(t.shape);
    return out;
}

std::vector<Cycle> BasisTable::z_column(int degree) const {
    std::vector<Cycle> out;
    auto it = by_degree.find(degree);
    if (it == by_degree.end()) return out;
    for (const GeneratorTag& t : it->second)
        if (t.kind != GenKind::gw_even) out.push_back(t.gamma_image);
    return out;
}

// Witt symbol of an even tableau: completely even shapes come from the
// doubling map; the remaining families factor through the longest hook
// (untwisted, k(n-k) odd) or the Euler classes e_k / e_{n-k} (twisted).
static std::string witt_symbol_of(const Shape& s, int k, int n, Twist twist) {
    if (twist == Twist::untwisted) {
        if (auto pre = doubling_preimage(s)) return "p" + pre->str();
        // hook family: strip the first row and one box from the k-1 others
        std::vector<int> rest;
        for (int r = 2; r <= s.row_count(); ++r)
            if (s.row(r) > 1) rest.push_back(s.row(r) - 1);
        if (auto pre = doubling_preimage(Shape(rest))) return "R*p" + pre->str();
        return "?";
    }
    if (!s.empty() && s.row(1) == n - k) {  // sigma_{n-k} T
        std::vector<int> rest(s.rows().begin() + 1, s.rows().end());
        if (auto pre = doubling_preimage(Shape(rest))) return "e_perp*p" + pre->str();
    }
    if (s.row_count() == k) {  // sigma_{1^k} T
        std::vector<int> rest;
        for (int r = 1; r <= k; ++r)
            if (s.row(r) > 1) rest.push_back(s.row(r) - 1);
        if (auto pre = doubling_preimage(Shape(rest))) return "e_k*p" + pre->str();
    }
    return "?";
}

BasisTable chow_witt_basis(int k, int n, Twist twist) {
    const Truncation tr = Truncation::box(k, n);
    BasisTable table;
    table.k = k;
    table.n = n;
    table.twist = twist;

    for (const auto& list : enumerate_tableaux(tr, twist)) {
        for (const Tableau& t : list) {
            if (!classify(t, tr).even) continue;
            GeneratorTag tag;
            tag.kind = GenKind::gw_even;
            tag.degree = t.shape.degree();
            tag.shape = t.shape;
            tag.gamma_image = sigma(t.shape, Ring::integral, twist, tr);
            tag.witt_symbol = witt_symbol_of(t.shape, k, n, twist);
            table.by_degree[tag.degree].push_back(std::move(tag));
        }
    }
    for (const EtaIndex& e : eta_indices(tr, twist)) {
        EtaClass cls = eta_class_of(Tableau{e.root, twist}, tr, e.subset);
        GeneratorTag h;
        h.kind = GenKind::z_h;
        h.degree = e.shape.degree();
        h.shape = e.shape;
        h.eta = cls;
        h.gamma_image = cycle_scale(cls.a, 2);
        table.by_degree[h.degree].push_back(std::move(h));

        GeneratorTag bd;
        bd.kind = GenKind::z_partial;
        bd.degree = e.shape.degree() + 1;
        bd.shape = e.shape;
        bd.eta = cls;
        bd.gamma_image = cls.b;
        table.by_degree[bd.degree].push_back(std::move(bd));
    }
    return table;
}

bool lattice_equal_cycles(const std::vector<Cycle>& a, const std::vector<Cycle>& b,
                          const std::vector<Shape>& basis) {
    IntMat ma, mb;
    for (const Cycle& c : a) ma.push_back(cycle_vector(c, basis));
    for (const Cycle& c : b) mb.push_back(cycle_vector(c, basis));
    if (ma.empty() && mb.empty()) return true;
    if (ma.empty() || mb.empty()) {
        // one side empty: equal iff the other spans only zero
        const IntMat& m = ma.empty() ? mb : ma;
        return hermite_normal_form(m).empty();
    }
    return lattice_equal(ma, mb);
}

std::vector<RankRow> rank_report(int k, int n, Twist twist) {
    const Truncation tr = Truncation::box(k, n);
    BasisTable table = chow_witt_basis(k, n, twist);
    MotiveDecomposition dec = decompose_grassmannian(k, n, twist);
    const int shift = twist == Twist::twisted ? 1 : 0;
    const int top = k * (n - k);

    std::vector<RankRow> rows;
    for (int d = 0; d <= top; ++d) {
        RankRow r;
        r.degree = d;
        auto it = table.by_degree.find(d);
        long h_count = 0, partial_count = 0;
        if (it != table.by_degree.end()) {
            for (const GeneratorTag& t : it->second) {
                if (t.kind == GenKind::gw_even)
                    ++r.gw_rank;
                else
                    ++r.z_rank;
                if (t.kind == GenKind::z_h) ++h_count;
                if (t.kind == GenKind::z_partial) ++partial_count;
            }
        }
        r.e_dim = e_dimension(tr, twist, d);
        Sq2Matrix here = sq2_matrix(tr, twist, d);
        long ker = static_cast<long>(here.source.size()) - static_cast<long>(here.m.rank());
        long im = d > 0 ? static_cast<long>(sq2_matrix(tr, twist, d - 1).m.rank()) : 0;
        r.ker_dim = ker;
        r.im_dim = im;

        // cross-checks: GW lines = E-dimension = unit count; the boundary
        // lines freely generate the image, h-lines match cones in degree d
        long units = dec.count(SummandKind::unit, d + shift);
        long cones_here = dec.count(SummandKind::eta_cone, d + shift);
        long cones_below = d > 0 ? dec.count(SummandKind::eta_cone, d - 1 + shift) : 0;
        r.consistent = r.gw_rank == r.e_dim && r.gw_rank == units && h_count == cones_here &&
                       partial_count == cones_below && im == cones_below &&
                       ker == r.gw_rank + cones_below;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace mw
