#pragma once

#include <map>
#include <set>
#include <vector>

#include "mw/shape.hpp"

namespace mw {

// Checkerboard colour of the box in row r, column c (both 1-based).
// Untwisted anchors (1,1) black, twisted anchors it white; colours alternate
// in both directions.
bool box_is_white(Twist twist, int r, int c);

// Rows where one white box can be appended keeping a weakly decreasing,
// truncation-admissible shape. Includes the first empty row. Increasing row
// order; position p of the classical index set A is the p-th entry.
std::vector<int> addable_rows(const Tableau& t, const Truncation& tr);

// Rows whose last box is white and whose removal keeps a valid shape.
std::vector<int> removable_rows(const Tableau& t, const Truncation& tr);

// Shapes obtained by a single white-box addition / removal.
std::vector<Shape> add_shapes(const Tableau& t, const Truncation& tr);
std::vector<Shape> remove_shapes(const Tableau& t, const Truncation& tr);

// White boxes added simultaneously at the given 1-based positions of the
// addable list (strictly increasing). The empty list returns t unchanged.
Tableau add_boxes(const Tableau& t, const Truncation& tr, const std::vector<int>& positions);

struct TableauClass {
    bool irredundant = false;  // nothing removable
    bool full = false;         // nothing addable
    bool even = false;         // both
};

TableauClass classify(const Tableau& t, const Truncation& tr);

// Rows pair up as (2a,2a),(2b,2b),...: equal adjacent rows of even length.
bool completely_even(const Shape& s);

// Closed-form case analysis of the even (irredundant and full) property:
//   untwisted, untruncated or k(n-k) even: completely even;
//   untwisted, k(n-k) odd: completely even, or the hook family
//     (n-k, 2a_1+1, 2a_1+1, ..., 1, 1) with exactly k rows;
//   twisted: the first-row-(n-k) family and/or the full-column family,
//     depending on the parities of k and n; never for untruncated twists.
// Equivalence with classify().even is exercised exhaustively by the suite.
bool even_closed_form(const Tableau& t, const Truncation& tr);

// All shapes reachable from t by repeatedly adding white boxes, t included.
std::set<Shape> closure(const Tableau& t, const Truncation& tr);

// All admissible shapes grouped by box count, each degree in deterministic
// (lexicographic) order. Untruncated enumeration is infinite, so max_degree
// is mandatory there; for a box truncation, max_degree < 0 means "all".
std::vector<std::vector<Tableau>> enumerate_tableaux(const Truncation& tr, Twist twist,
                                                     int max_degree = -1);

// Per-degree tableau counts; degree d count is coefficient d of the Gaussian
// binomial for a box truncation.
std::vector<long> degree_counts(const Truncation& tr, Twist twist, int max_degree = -1);

// Column lengths of s.
Shape transpose(const Shape& s);

// Partition of the admissible shapes into closures of irredundant tableaux.
struct Components {
    // shape -> its unique irredundant root
    std::map<Shape, Shape> root_of;
    // root -> closure members (including the root)
    std::map<Shape, std::set<Shape>> members;

    std::vector<Shape> roots() const {
        std::vector<Shape> r;
        for (const auto& [root, _] : members) r.push_back(root);
        return r;
    }
};

Components irredundant_components(const Truncation& tr, Twist twist, int max_degree = -1);

// Irredundant root of a single shape (strip white boxes until none removable).
Shape irredundant_root(const Tableau& t, const Truncation& tr);

}  // namespace mw
