#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mw/shape.hpp"

namespace mw {

// One direct summand of a split motive: a Tate twist Z((i)) or a Hopf-cone
// Z/eta((i)).
enum class SummandKind { unit, eta_cone };

struct Summand {
    SummandKind kind = SummandKind::unit;
    int weight = 0;

    auto operator<=>(const Summand&) const = default;
};

struct MotiveDecomposition {
    std::string label;
    Twist twist = Twist::untwisted;
    bool thom_shifted = false;            // twisted objects carry weights |L|+1
    std::map<Summand, long> summands;     // multiset

    void add(SummandKind kind, int weight, long count = 1);
    long count(SummandKind kind, int weight) const;
    long total_rank() const;  // each unit counts 1, each cone 2 in DM

    // w (unit counts) and t (cone counts) by weight, up to the top weight.
    std::vector<long> unit_counts() const;
    std::vector<long> cone_counts() const;
    // chow_rank(j) = units(j) + cones(j) + cones(j-1)
    std::vector<long> chow_ranks() const;

    bool same_summands(const MotiveDecomposition& other) const {
        return summands == other.summands;
    }
};

// Split decomposition of Z(Gr(k,n)) (untwisted) or Th(O(1)) (twisted,
// weights shifted by +1): units at even tableaux, eta-cones at the grown
// shapes of irredundant-not-full roots over position subsets with i_1 > 1.
MotiveDecomposition decompose_grassmannian(int k, int n, Twist twist);

// Weights carrying at least one unit summand.
std::set<int> witt_weights(const MotiveDecomposition& d);

// t_j = sum_{i<=j} (-1)^i (s_{j-i} - w_{j-i}); throws when any entry is
// negative or the tail fails to vanish (inputs not from a split motive).
std::vector<long> eta_from_counts(const std::vector<long>& s, const std::vector<long>& w);

struct RealizationRow {
    int degree = 0;
    long free_rank = 0;     // w_i
    long torsion_rank = 0;  // t_{i-1}
    long chow_rank = 0;     // s_i
    bool consistent = false;  // s_i == w_i + t_i + t_{i-1}
};

// Real/complex realization bookkeeping for Z(Gr(k,n)), untwisted.
std::vector<RealizationRow> realization_report(int k, int n);

// The applicable direct-sum recursions in (k,n) (smaller Grassmannians and
// Thom spaces, eta-quotients of motives, Tate shifts), compared as summand
// multisets.
bool recursion_check(int k, int n);

// Checks the Witt-weight containment constraints for the given object.
bool witt_weight_constraints_ok(int k, int n, Twist twist);

// Complete flag variety Fl(n) at the point: units over subsets of the
// generator degrees (4a-1, resp. n-1 for the top one when n is even),
// eta-cones filled in from the coinvariant-algebra Chow ranks.
MotiveDecomposition flag_motive(int n);

// Chow ranks of Fl(n): coefficients of [n]_q! (permutations by length).
std::vector<long> flag_chow_ranks(int n);

// Generator degrees of the flag: deg(a) = 4a-1, and n-1 for a = n/2 (n even).
std::vector<int> flag_generator_degrees(int n);

}  // namespace mw
