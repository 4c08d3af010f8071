#pragma once

#include <vector>

#include "mw/cycle.hpp"
#include "mw/shape.hpp"

namespace mw::reference {

// Known additive bases of the Chow-Witt groups of Gr(2,4) and Gr(3,6), both
// line-bundle twists, transcribed once as fixture data. GW columns are exact
// sets of even tableaux; Z columns are compared per degree up to lattice
// equality (additive bases are only unique up to the span).

struct ChowWittTable {
    int k = 0, n = 0;
    Twist twist = Twist::untwisted;
    std::vector<Shape> gw;                             // even tableaux
    std::vector<std::vector<std::pair<Int, Shape>>> z; // Z-lines: sums of coef*shape
};

std::vector<ChowWittTable> chow_witt_tables();

// Even tableaux (generators of the free Witt parts): untwisted for Gr(2,4)
// and Gr(3,6), twisted for Gr(2,4); the twisted Gr(3,6) set is empty.
std::vector<Shape> even_untwisted_2_4();
std::vector<Shape> even_untwisted_3_6();
std::vector<Shape> even_twisted_2_4();

// Irredundant untwisted tableaux of Gr(2,4).
std::vector<Shape> irredundant_untwisted_2_4();

}  // namespace mw::reference
