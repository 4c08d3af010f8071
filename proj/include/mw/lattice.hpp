#pragma once

#include <vector>

#include "mw/ints.hpp"

namespace mw {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // rows span the lattice

// Row-style Hermite normal form of the row span: positive pivots, entries
// above a pivot reduced into [0, pivot), zero rows dropped. Canonical, so two
// spans are equal iff their forms are identical.
IntMat hermite_normal_form(IntMat rows);

// Equality of integer row spans.
bool lattice_equal(const IntMat& a, const IntMat& b);

// Membership of v in the row span of basis (exact, over Z).
bool lattice_contains(const IntMat& basis, const IntVec& v);

}  // namespace mw
