#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mw/ints.hpp"
#include "mw/shape.hpp"

namespace mw {

// Linear combination of determinantal basis elements x_Lambda over n
// single-index generators x_1..x_n (x_0 = 1, x_i = 0 outside [0,n]).
// x_Lambda is the l x l determinant with (i,j) entry x_{Lambda_i - i + j};
// under x_i = e_i these are the Schur polynomials s_{Lambda^T}.
struct SchurCombo {
    Ring ring = Ring::integral;
    int num_vars = 0;
    std::map<Shape, Int> terms;  // normalized: no zero coefficients stored
};

SchurCombo schur_zero(Ring ring, int n);
SchurCombo schur_basis(Ring ring, int n, const Shape& s);  // zero if s has a part > n
SchurCombo schur_add(const SchurCombo& a, const SchurCombo& b);
SchurCombo schur_scale(const SchurCombo& a, const Int& c);
bool schur_is_zero(const SchurCombo& a);
std::string schur_str(const SchurCombo& a);

// Sort a determinantal index into +/- a partition, or nothing when the
// determinant vanishes (repeated rows, negative part, or a part > n).
struct Straightened {
    int sign;  // +1 / -1
    Shape shape;
};
std::optional<Straightened> straighten(const std::vector<int>& index, int n);

// Monomial in the generators: weakly decreasing list of indices in 1..n.
using GenMonomial = std::vector<int>;
using GenPoly = std::map<GenMonomial, Int>;

// x_Lambda expanded as a polynomial in the single-index generators, by
// cofactor expansion along the first determinant column.
GenPoly det_expand(const Shape& s, int n);

// x_t * x_Lambda = sum over interleavings b (a_i <= b_i <= a_{i-1}),
// parts above n dropped.
SchurCombo pieri(Ring ring, int n, int t, const Shape& s);

// Bilinear product in the determinantal basis: one factor det-expanded into
// generators, then iterated Pieri.
SchurCombo schur_product(const SchurCombo& a, const SchurCombo& b);

// Littlewood-Richardson coefficient c^{lambda}_{s1,s2} (transpose-symmetric,
// so the x-basis product computes the genuine coefficient).
Int lr_coefficient(const Shape& s1, const Shape& s2, const Shape& lambda);

// Degree +1 derivation with Sq2(x_i) = (i+1) x_{i+1} + x_1 x_i over GF(2),
// applied through det_expand and re-expressed in the basis.
SchurCombo sq2_poly(const SchurCombo& a);

// Closed form: sum_i (a_i - i + 1) x_{..., a_i + 1, ...} + l * x_{a,1} mod 2.
SchurCombo sq2_closed_form(const Shape& s, int n);

struct PolySplit {
    long ker_dim = 0;
    long im_dim = 0;
    long completely_even_count = 0;
    bool verified = false;
};

// Kernel/image split of the derivation in one degree: the completely even
// x_Lambda complement the image inside the kernel.
PolySplit ker_im_split_poly(int n, int degree);

// Series 1 - a_1 t + a_2 t^2 - ... + (-1)^m a_m t^m; coefficients stored
// unsigned, the alternating signs live in the convention.
struct CoeffSeries {
    std::vector<Int> a;  // a[0] == 1

    explicit CoeffSeries(std::vector<Int> coeffs);
    int bound() const { return static_cast<int>(a.size()) - 1; }
    Int coeff(int i) const {  // 0 outside the stored range
        return (i >= 0 && i < static_cast<int>(a.size())) ? a[i] : Int(0);
    }
};

CoeffSeries series_product(const CoeffSeries& f, const CoeffSeries& g);

// Coefficients of 1/f(t) = sum u_i t^i, i.e. the column values a_{1^i}.
std::vector<Int> inverse_column(const CoeffSeries& f, int up_to);

// det(a_{lambda_i - i + j}) over a scalar coefficient table.
Int jt_determinant(const CoeffSeries& f, const Shape& lambda);

// The four alternating convolution identities relating f, g and h = f g
// through their column values, checked for all degrees <= m.
bool inversion_identities(const CoeffSeries& f, const CoeffSeries& g, int m);

// Specialize a,b,c to elementary symmetric functions of disjoint alphabets of
// sizes k and n-k and check: the LR expansion of c_Lambda, the support bounds
// S <= Lambda on both factors, and the integer-span memberships of b_Lambda
// (resp. a_Lambda) over {b_S * c-monomials : S <= Lambda, at most k rows}
// (resp. at most n-k rows).
bool lr_support_check(const Shape& lambda, int k, int n);

// --- monomial-level oracle -------------------------------------------------
// Honest polynomials in explicit variables; kept independent of the
// det_expand/Pieri route so products can be cross-checked against it.

using Exponents = std::vector<int>;
using MPoly = std::map<Exponents, Int>;

MPoly mpoly_one(int nvars);
MPoly mpoly_mul(const MPoly& a, const MPoly& b);
MPoly mpoly_add(const MPoly& a, const MPoly& b);
bool mpoly_equal(const MPoly& a, const MPoly& b);

// e_i of the variables listed in vars (0-based indices into nvars slots).
MPoly elementary_mpoly(int nvars, const std::vector<int>& vars, int i);

// x_Lambda evaluated at x_i = e_i(vars): det of complete e-minors.
MPoly schur_mpoly(int nvars, const std::vector<int>& vars, const Shape& s);

}  // namespace mw
