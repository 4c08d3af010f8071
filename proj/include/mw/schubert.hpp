#pragma once

#include <optional>
#include <vector>

#include "mw/cycle.hpp"
#include "mw/gf2.hpp"
#include "mw/lattice.hpp"
#include "mw/tableau.hpp"

namespace mw {

// The Steenrod square from degree d to d+1 as a GF(2) matrix over the
// deterministic tableau orderings; column of Lambda has ones at A(Lambda).
struct Sq2Matrix {
    Truncation tr;
    Twist twist = Twist::untwisted;
    int source_degree = 0;
    std::vector<Shape> source;  // degree d basis
    std::vector<Shape> target;  // degree d+1 basis
    Gf2Matrix m;                // target x source
};

Sq2Matrix sq2_matrix(const Truncation& tr, Twist twist, int degree);

// Admissible shapes of one degree, in the deterministic order.
std::vector<Shape> degree_basis(const Truncation& tr, Twist twist, int degree);

// dim Ker(Sq2)_d / Im(Sq2)_d over GF(2).
long e_dimension(const Truncation& tr, Twist twist, int degree);

struct KerImSplit {
    std::vector<Cycle> im_basis;    // mod-2 cycles spanning Im(Sq2)_d
    std::vector<Shape> even_basis;  // even tableaux of degree d
    bool verified = false;          // direct-sum decomposition of the kernel
};

KerImSplit ker_im_split(const Truncation& tr, Twist twist, int degree);

// One eta index per irredundant-not-full root and position subset with
// i_1 > 1 (the empty subset meaning the root itself).
struct EtaIndex {
    Shape root;
    std::vector<int> subset;  // positions of A(root), all > 1
    Shape shape;              // root with white boxes at the subset positions
};

std::vector<EtaIndex> eta_indices(const Truncation& tr, Twist twist, int max_degree = -1);

// Per-component mod-2 basis of Ker(Sq2)_d: the root if even, otherwise the
// squares of the eta indices landing in degree d.
std::vector<Cycle> ker_sq2_basis(const Truncation& tr, Twist twist, int degree);

// Integral basis of Ker(Sq2 o pi)_d: even roots, integral squares of eta
// indices of degree d-1, and doubled eta indices of degree d.
std::vector<Cycle> ker_sq2_pi_basis(const Truncation& tr, Twist twist, int degree);

// HNF basis of {x integral : Sq2(x mod 2) = 0} in degree d, computed from the
// GF(2) kernel directly; independent oracle for the basis above.
IntMat ker_sq2_pi_lattice_oracle(const Truncation& tr, Twist twist, int degree);

// sigma_{a_1,...,a_l} -> sigma_{2a_1,2a_1,...,2a_l,2a_l}
Shape doubled_shape(const Shape& s);
std::optional<Shape> doubling_preimage(const Shape& s);  // iff completely even
Cycle doubling(const Cycle& c, const Truncation& target_tr);

// Schubert product: computed untruncated through the determinantal engine
// (sigma_Lambda corresponds to x_{Lambda^T}), then truncated.
Cycle schubert_product(const Cycle& a, const Cycle& b);

// sigma_{2j}^2 = doubled(sigma_j) + Sq2(sigma_{4j-1} + sigma_{4j-3,2} + ...
// + sigma_{2j+1,2j-2}) mod 2, untruncated.
bool giambelli_identity_check(int j);

// Coefficient vector of a homogeneous cycle over the degree basis.
IntVec cycle_vector(const Cycle& c, const std::vector<Shape>& basis);

}  // namespace mw
