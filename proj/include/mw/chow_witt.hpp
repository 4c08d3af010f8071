#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mw/cycle.hpp"
#include "mw/schubert.hpp"

namespace mw {

// Eta-inverted class: a pair of integral cycles in adjacent degrees with
// Sq2_L(a) = b (mod 2), the fiber-product condition.
struct EtaClass {
    Cycle a;  // degree d
    Cycle b;  // degree d+1
};

// Validates the congruence and degree layout.
EtaClass make_eta_class(Cycle a, Cycle b);

EtaClass eta_identity(const Truncation& tr);  // (1, 0), untwisted

// (a,b)(c,d) = (ac, bc + ad); twists compose additively mod 2.
EtaClass eta_mul(const EtaClass& u, const EtaClass& v);

// (Lambda_{subset}, integral Sq2 of it); root must be irredundant not full
// and the subset positions all > 1.
EtaClass eta_class_of(const Tableau& root, const Truncation& tr, const std::vector<int>& subset);

enum class GenKind { gw_even, z_h, z_partial };

// One additive generator of the Chow-Witt group: a GW-line on an even
// tableau, or a Z-line on h / boundary of an eta class. The gamma image is
// the underlying integral Chow cycle; even tableaux also carry their Witt
// symbol (doubling preimage plus hook / Euler-class factor).
struct GeneratorTag {
    GenKind kind = GenKind::gw_even;
    int degree = 0;
    Shape shape;                   // the even tableau (gw_even) or eta index
    std::optional<EtaClass> eta;   // for z_h / z_partial
    Cycle gamma_image;
    std::string witt_symbol;
};

struct BasisTable {
    int k = 0, n = 0;
    Twist twist = Twist::untwisted;
    std::map<int, std::vector<GeneratorTag>> by_degree;

    std::vector<Shape> gw_column() const;          // all even tableaux
    std::vector<Cycle> z_column(int degree) const; // gamma images of the Z-lines
};

BasisTable chow_witt_basis(int k, int n, Twist twist);

// Equality of the integer spans of two families of homogeneous cycles inside
// the degree lattice (canonical echelon forms compared).
bool lattice_equal_cycles(const std::vector<Cycle>& a, const std::vector<Cycle>& b,
                          const std::vector<Shape>& basis);

struct RankRow {
    int degree = 0;
    long gw_rank = 0;
    long z_rank = 0;
    long e_dim = 0;
    long ker_dim = 0;
    long im_dim = 0;
    bool consistent = false;
};

// Degreewise cross-check of the basis against the GF(2) rank data and the
// motive counts.
std::vector<RankRow> rank_report(int k, int n, Twist twist);

}  // namespace mw
