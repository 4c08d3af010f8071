#include "mw/schubert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mw/symfunc.hpp"

namespace mw {

std::vector<Shape> degree_basis(const Truncation& tr, Twist twist, int degree) {
    auto lists = enumerate_tableaux(tr, twist, degree);
    std::vector<Shape> out;
    if (degree < static_cast<int>(lists.size()))
        for (const Tableau& t : lists[degree]) out.push_back(t.shape);
    return out;
}

Sq2Matrix sq2_matrix(const Truncation& tr, Twist twist, int degree) {
    Sq2Matrix sm;
    sm.tr = tr;
    sm.twist = twist;
    sm.source_degree = degree;
    sm.source = degree_basis(tr, twist, degree);
    sm.target = degree_basis(tr, twist, degree + 1);
    std::map<Shape, std::size_t> target_pos;
    for (std::size_t i = 0; i < sm.target.size(); ++i) target_pos[sm.target[i]] = i;
    sm.m = Gf2Matrix(sm.target.size(), sm.source.size());
    for (std::size_t c = 0; c < sm.source.size(); ++c)
        for (const Shape& up : add_shapes(Tableau{sm.source[c], twist}, tr))
            sm.m.set(target_pos.at(up), c);
    return sm;
}

long e_dimension(const Truncation& tr, Twist twist, int degree) {
    Sq2Matrix out = sq2_matrix(tr, twist, degree);
    long ker = static_cast<long>(out.source.size()) - static_cast<long>(out.m.rank());
    long im = 0;
    if (degree > 0) im = static_cast<long>(sq2_matrix(tr, twist, degree - 1).m.rank());
    return ker - im;
}

KerImSplit ker_im_split(const Truncation& tr, Twist twist, int degree) {
    KerImSplit split;
    std::vector<Shape> basis = degree_basis(tr, twist, degree);
    std::map<Shape, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;

    std::vector<std::vector<bool>> im_rows;
    if (degree > 0) {
        for (const Shape& below : degree_basis(tr, twist, degree - 1)) {
            Cycle img = sq2(sigma(below, Ring::mod2, twist, tr));
            if (cycle_is_zero(img)) continue;
            std::vector<bool> row(basis.size(), false);
            for (const auto& [s, c] : img.terms) row[pos.at(s)] = true;
            // keep only rows enlarging the span
            std::vector<std::vector<bool>> probe = im_rows;
            probe.push_back(row);
            if (gf2_rank_of(probe) > gf2_rank_of(im_rows)) {
                im_rows.push_back(row);
                split.im_basis.push_back(img);
            }
        }
    }

    std::vector<std::vector<bool>> joint = im_rows;
    for (const Shape& s : basis) {
        if (!classify(Tableau{s, twist}, tr).even) continue;
        split.even_basis.push_back(s);
        std::vector<bool> row(basis.size(), false);
        row[pos.at(s)] = true;
        joint.push_back(row);
    }

    long ker = static_cast<long>(basis.size()) - static_cast<long>(sq2_matrix(tr, twist, degree).m.rank());
    long want = static_cast<long>(im_rows.size() + split.even_basis.size());
    split.verified = static_cast<long>(gf2_rank_of(joint)) == want && ker == want;
    return split;
}

std::vector<EtaIndex> eta_indices(const Truncation& tr, Twist twist, int max_degree) {
    std::vector<EtaIndex> out;
    Components comp = irredundant_components(tr, twist, max_degree);
    for (const Shape& root : comp.roots()) {
        Tableau t{root, twist};
        TableauClass cls = classify(t, tr);
        if (!cls.irredundant || cls.full) continue;
        int m = static_cast<int>(addable_rows(t, tr).size());
        // subsets of positions {2..m}, empty subset first
        for (unsigned bits = 0; bits < (1u << (m - 1)); ++bits) {
            std::vector<int> subset;
            for (int p = 2; p <= m; ++p)
                if (bits & (1u << (p - 2))) subset.push_back(p);
            Tableau grown = add_boxes(t, tr, subset);
            out.push_back(EtaIndex{root, subset, grown.shape});
        }
    }
    return out;
}

std::vector<Cycle> ker_sq2_basis(const Truncation& tr, Twist twist, int degree) {
    std::vector<Cycle> out;
    for (const Shape& s : degree_basis(tr, twist, degree))
        if (classify(Tableau{s, twist}, tr).even)
            out.push_back(sigma(s, Ring::mod2, twist, tr));
    for (const EtaIndex& e : eta_indices(tr, twist, tr.truncated() ? -1 : degree))
        if (e.shape.degree() == degree - 1)
            out.push_back(sq2(sigma(e.shape, Ring::mod2, twist, tr)));
    return out;
}

std::vector<Cycle> ker_sq2_pi_basis(const Truncation& tr, Twist twist, int degree) {
    std::vector<Cycle> out;
    for (const Shape& s : degree_basis(tr, twist, degree))
        if (classify(Tableau{s, twist}, tr).even)
            out.push_back(sigma(s, Ring::integral, twist, tr));
    std::vector<EtaIndex> indices = eta_indices(tr, twist, tr.truncated() ? -1 : degree);
    for (const EtaIndex& e : indices)
        if (e.shape.degree() == degree - 1)
            out.push_back(sq2(sigma(e.shape, Ring::integral, twist, tr)));
    for (const EtaIndex& e : indices)
        if (e.shape.degree() == degree)
            out.push_back(sigma(e.shape, Ring::integral, twist, tr, 2));
    return out;
}

IntVec cycle_vector(const Cycle& c, const std::vector<Shape>& basis) {
    std::map<Shape, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    IntVec v(basis.size(), Int(0));
    for (const auto& [s, coef] : c.terms) v[pos.at(s)] = coef;
    return v;
}

IntMat ker_sq2_pi_lattice_oracle(const Truncation& tr, Twist twist, int degree) {
    Sq2Matrix sm = sq2_matrix(tr, twist, degree);
    const std::size_t n = sm.source.size();
    IntMat rows;
    Gf2Matrix kernel = sm.m.kernel_basis();
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        IntVec v(n, Int(0));
        for (std::size_t c = 0; c < n; ++c)
            if (kernel.get(r, c)) v[c] = 1;
        rows.push_back(v);
    }
    for (std::size_t c = 0; c < n; ++c) {
        IntVec v(n, Int(0));
        v[c] = 2;
        rows.push_back(v);
    }
    return hermite_normal_form(rows);
}

Shape doubled_shape(const Shape& s) {
    std::vector<int> v;
    for (int r = 1; r <= s.row_count(); ++r) {
        v.push_back(2 * s.row(r));
        v.push_back(2 * s.row(r));
    }
    return Shape(v);
}

std::optional<Shape> doubling_preimage(const Shape& s) {
    if (!completely_even(s)) return std::nullopt;
    std::vector<int> v;
    for (int r = 1; r <= s.row_count(); r += 2) v.push_back(s.row(r) / 2);
    return Shape(v);
}

Cycle doubling(const Cycle& c, const Truncation& target_tr) {
    if (c.ring != Ring::integral || c.twist != Twist::untwisted)
        throw std::invalid_argument("doubling applies to integral untwisted cycles");
    Cycle out = cycle_zero(c.ring, c.twist, target_tr);
    for (const auto& [s, v] : c.terms) cycle_accumulate(out, doubled_shape(s), v);
    return out;
}

Cycle schubert_product(const Cycle& a, const Cycle& b) {
    if (a.ring != b.ring || !(a.tr == b.tr))
        throw std::invalid_argument("schubert_product: mismatched contexts");
    // work untruncated in the determinantal basis under sigma <-> x-transpose
    int nvars = 1;
    for (const auto& [s, v] : a.terms) nvars = std::max(nvars, s.row_count());
    for (const auto& [s, v] : b.terms) nvars = std::max(nvars, s.row_count());
    int deg = 0;
    int da = 0, db = 0;
    for (const auto& [s, v] : a.terms) da = std::max(da, s.degree());
    for (const auto& [s, v] : b.terms) db = std::max(db, s.degree());
    deg = da + db;
    nvars = std::max(nvars, deg);  // column lengths of products stay below the total degree

    SchurCombo xa = schur_zero(a.ring, nvars), xb = schur_zero(a.ring, nvars);
    for (const auto& [s, v] : a.terms) xa = schur_add(xa, schur_scale(schur_basis(a.ring, nvars, transpose(s)), v));
    for (const auto& [s, v] : b.terms) xb = schur_add(xb, schur_scale(schur_basis(a.ring, nvars, transpose(s)), v));
    SchurCombo prod = schur_product(xa, xb);

    Cycle untruncated = cycle_zero(a.ring, a.twist ^ b.twist, Truncation::none());
    for (const auto& [s, v] : prod.terms) cycle_accumulate(untruncated, transpose(s), v);
    return truncate_cycle(untruncated, a.tr);
}

bool giambelli_identity_check(int j) {
    if (j < 1) throw std::invalid_argument("giambelli_identity_check needs j >= 1");
    const Truncation tr = Truncation::none();
    const Twist tw = Twist::untwisted;
    Cycle lhs = schubert_product(sigma(Shape{2 * j}, Ring::mod2, tw, tr),
                                 sigma(Shape{2 * j}, Ring::mod2, tw, tr));
    Cycle rhs = sigma(doubled_shape(Shape{j}), Ring::mod2, tw, tr);
    Cycle witness = cycle_zero(Ring::mod2, tw, tr);
    for (int i = 0; i < j; ++i) {
        std::vector<int> rows{4 * j - 1 - 2 * i};
        if (i > 0) rows.push_back(2 * i);
        cycle_accumulate(witness, Shape(rows), 1);
    }
    rhs = cycle_add(rhs, sq2(witness));
    return congruent_mod2(lhs, rhs);
}

}  // namespace mw
