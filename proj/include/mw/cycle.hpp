#pragma once

#include <map>
#include <string>

#include "mw/ints.hpp"
#include "mw/shape.hpp"

namespace mw {

// Element of CH (integral) or Ch (mod 2) of a Grassmannian in the Schubert
// basis: finite coefficient table over admissible shapes. The twist tags
// which Steenrod coloring applies to the cycle.
struct Cycle {
    Ring ring = Ring::integral;
    Twist twist = Twist::untwisted;
    Truncation tr = Truncation::none();
    std::map<Shape, Int> terms;  // normalized: no zeros; mod2 values in {1}
};

Cycle cycle_zero(Ring ring, Twist twist, const Truncation& tr);
Cycle sigma(const Shape& s, Ring ring, Twist twist, const Truncation& tr, const Int& coef = 1);

void cycle_accumulate(Cycle& c, const Shape& s, const Int& coef);
Cycle cycle_add(const Cycle& a, const Cycle& b);
Cycle cycle_scale(const Cycle& a, const Int& k);
bool cycle_is_zero(const Cycle& a);
Cycle reduce_mod2(const Cycle& a);

// -1 when not homogeneous (or zero).
int cycle_degree(const Cycle& a);

std::string cycle_str(const Cycle& a);

// Equality of mod-2 reductions.
bool congruent_mod2(const Cycle& a, const Cycle& b);

// Linear extension of Lambda -> sum of single-white-box additions; the
// integral version lifts with coefficient +1 on every added shape.
Cycle sq2(const Cycle& c);

// Drop shapes that are not admissible for the finer truncation.
Cycle truncate_cycle(const Cycle& c, const Truncation& tr);

}  // namespace mw
