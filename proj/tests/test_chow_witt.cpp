#include <doctest.h>

#include "mw/chow_witt.hpp"
#include "mw/reference_tables.hpp"

using namespace mw;

namespace {
const Truncation kBox24 = Truncation::box(2, 4);
const Truncation kBox36 = Truncation::box(3, 6);

Cycle u_sigma(const Shape& s, const Truncation& tr, Int coef = 1) {
    return sigma(s, Ring::integral, Twist::untwisted, tr, coef);
}
}  // namespace

TEST_CASE("eta class construction validates the fiber condition") {
    Cycle a = u_sigma(Shape{1}, kBox24);
    EtaClass good = make_eta_class(a, sq2(a));
    CHECK(cycle_degree(good.b) == 2);
    // offset by an odd cycle: violates Sq2(a) = b (mod 2)
    Cycle bad = cycle_add(sq2(a), u_sigma(Shape{2}, kBox24));
    CHECK_THROWS_AS(make_eta_class(a, bad), std::invalid_argument);
    // even offsets stay legal
    Cycle shifted = cycle_add(sq2(a), u_sigma(Shape{2}, kBox24, 2));
    CHECK_NOTHROW(make_eta_class(a, shifted));
}

TEST_CASE("eta multiplication") {
    EtaClass one = eta_identity(kBox24);
    Cycle a = u_sigma(Shape{1}, kBox24);
    EtaClass u = make_eta_class(a, sq2(a));

    EtaClass left = eta_mul(one, u);
    EtaClass right = eta_mul(u, one);
    CHECK(left.a.terms == u.a.terms);
    CHECK(left.b.terms == u.b.terms);
    CHECK(right.a.terms == u.a.terms);
    CHECK(right.b.terms == u.b.terms);

    // ((sigma_1, Sq2 sigma_1))^2 = (sigma_2 + sigma_{1,1}, 2 sigma_1 (sigma_2 + sigma_{1,1}))
    EtaClass sq = eta_mul(u, u);
    CHECK(sq.a.terms == std::map<Shape, Int>{{Shape{2}, 1}, {Shape{1, 1}, 1}});
    CHECK(sq.b.terms == std::map<Shape, Int>{{Shape{2, 1}, 4}});

    // (0,b)(0,d) = (0,0)
    EtaClass zb = make_eta_class(cycle_zero(Ring::integral, Twist::untwisted, kBox24),
                                 u_sigma(Shape{1}, kBox24, 2));
    EtaClass zd = make_eta_class(cycle_zero(Ring::integral, Twist::untwisted, kBox24),
                                 u_sigma(Shape{2}, kBox24, 2));
    EtaClass z = eta_mul(zb, zd);
    CHECK(cycle_is_zero(z.a));
    CHECK(cycle_is_zero(z.b));
}

TEST_CASE("eta classes of tableaux") {
    EtaClass e0 = eta_class_of(Tableau{Shape{1}, Twist::untwisted}, kBox24, {});
    CHECK(e0.a.terms == std::map<Shape, Int>{{Shape{1}, 1}});
    CHECK(e0.b.terms == std::map<Shape, Int>{{Shape{2}, 1}, {Shape{1, 1}, 1}});

    EtaClass e2 = eta_class_of(Tableau{Shape{1}, Twist::untwisted}, kBox24, {2});
    CHECK(e2.a.terms == std::map<Shape, Int>{{Shape{1, 1}, 1}});
    CHECK(e2.b.terms == std::map<Shape, Int>{{Shape{2, 1}, 1}});

    EtaClass tw = eta_class_of(Tableau{Shape{}, Twist::twisted}, kBox24, {});
    CHECK(tw.a.terms == std::map<Shape, Int>{{Shape{}, 1}});
    CHECK(tw.b.terms == std::map<Shape, Int>{{Shape{1}, 1}});

    CHECK_THROWS_AS(eta_class_of(Tableau{Shape{2, 2}, Twist::untwisted}, kBox24, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(eta_class_of(Tableau{Shape{1}, Twist::untwisted}, kBox24, {1}),
                    std::invalid_argument);
}

TEST_CASE("eta multiplication needs one truncation") {
    EtaClass u = eta_identity(kBox24);
    EtaClass v = eta_identity(kBox36);
    CHECK_THROWS_AS(eta_mul(u, v), std::invalid_argument);
}

TEST_CASE("lattice equality of cycle families") {
    std::vector<Shape> basis = degree_basis(kBox24, Twist::untwisted, 2);
    Cycle two11 = u_sigma(Shape{1, 1}, kBox24, 2);
    Cycle mixed = cycle_add(u_sigma(Shape{2}, kBox24), u_sigma(Shape{1, 1}, kBox24));
    Cycle two2 = u_sigma(Shape{2}, kBox24, 2);
    CHECK(lattice_equal_cycles({two11, mixed}, {two2, mixed}, basis));
    std::vector<Shape> basis1 = degree_basis(kBox24, Twist::untwisted, 1);
    CHECK_FALSE(lattice_equal_cycles({u_sigma(Shape{1}, kBox24)},
                                     {u_sigma(Shape{1}, kBox24, 2)}, basis1));
    CHECK(lattice_equal_cycles({}, {}, basis1));
}

TEST_CASE("chow-witt basis tables") {
    BasisTable t24 = chow_witt_basis(2, 4, Twist::untwisted);
    std::vector<Shape> gw_col = t24.gw_column();
    std::set<Shape> gw(gw_col.begin(), gw_col.end());
    CHECK(gw == std::set<Shape>{Shape{}, Shape{2, 2}});

    BasisTable t24t = chow_witt_basis(2, 4, Twist::twisted);
    std::vector<Shape> gwt_col = t24t.gw_column();
    std::set<Shape> gwt(gwt_col.begin(), gwt_col.end());
    CHECK(gwt == std::set<Shape>{Shape{2}, Shape{1, 1}});

    CHECK(chow_witt_basis(3, 6, Twist::twisted).gw_column().empty());

    // witt symbols carry the doubling preimage
    for (const auto& [d, tags] : t24.by_degree)
        for (const GeneratorTag& tag : tags)
            if (tag.kind == GenKind::gw_even) CHECK(tag.witt_symbol.front() == 'p');
}

TEST_CASE("generated tables match the reference fixtures") {
    for (const auto& ref : reference::chow_witt_tables()) {
        Truncation tr = Truncation::box(ref.k, ref.n);
        BasisTable got = chow_witt_basis(ref.k, ref.n, ref.twist);
        std::vector<Shape> gw_col = got.gw_column();
        std::set<Shape> gw_got(gw_col.begin(), gw_col.end());
        std::set<Shape> gw_want(ref.gw.begin(), ref.gw.end());
        CHECK(gw_got == gw_want);

        std::map<int, std::vector<Cycle>> want;
        for (const auto& line : ref.z) {
            Cycle c = cycle_zero(Ring::integral, ref.twist, tr);
            for (const auto& [coef, s] : line) cycle_accumulate(c, s, coef);
            want[cycle_degree(c)].push_back(c);
        }
        for (int d = 0; d <= ref.k * (ref.n - ref.k) + 1; ++d) {
            std::vector<Cycle> have = got.z_column(d);
            std::vector<Cycle> expect = want.count(d) ? want[d] : std::vector<Cycle>{};
            CHECK(have.size() == expect.size());
            CHECK(lattice_equal_cycles(have, expect, degree_basis(tr, ref.twist, d)));
        }
    }
}

TEST_CASE("rank report") {
    std::vector<RankRow> rows = rank_report(2, 4, Twist::untwisted);
    REQUIRE(rows.size() == 5);
    CHECK(rows[2].gw_rank == 0);
    CHECK(rows[2].e_dim == 0);
    CHECK(rows[2].im_dim == 1);
    CHECK(rows[2].ker_dim == 1);
    for (const RankRow& r : rows) CHECK(r.consistent);

    std::vector<RankRow> r36 = rank_report(3, 6, Twist::untwisted);
    CHECK(r36[5].gw_rank == 1);  // the hook-family class

    long gw = 0, z = 0;
    for (const RankRow& r : r36) {
        gw += r.gw_rank;
        z += r.z_rank;
    }
    CHECK(gw + z == 20);  // total additive rank = tableau count
}
