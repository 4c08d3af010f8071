#include <doctest.h>

#include "mw/schubert.hpp"
#include "mw/symfunc.hpp"

using namespace mw;

namespace {
const Truncation kBox24 = Truncation::box(2, 4);
const Truncation kBox36 = Truncation::box(3, 6);
const Truncation kNone = Truncation::none();

Cycle u_sigma(const Shape& s, const Truncation& tr, Ring ring = Ring::integral) {
    return sigma(s, ring, Twist::untwisted, tr);
}
}  // namespace

TEST_CASE("steenrod square on cycles") {
    Cycle d = sq2(u_sigma(Shape{1}, kBox24));
    CHECK(d.terms == std::map<Shape, Int>{{Shape{2}, 1}, {Shape{1, 1}, 1}});
    CHECK(cycle_is_zero(sq2(u_sigma(Shape{}, kBox24))));
    Cycle tw = sq2(sigma(Shape{}, Ring::integral, Twist::twisted, kBox24));
    CHECK(tw.terms == std::map<Shape, Int>{{Shape{1}, 1}});
    // degree shifts by one
    CHECK(cycle_degree(d) == 2);
}

TEST_CASE("truncation of cycles") {
    Cycle c = u_sigma(Shape{3}, kNone);
    CHECK(cycle_is_zero(truncate_cycle(c, kBox24)));
    Cycle keep = truncate_cycle(u_sigma(Shape{2, 1}, kNone), kBox24);
    CHECK(keep.terms == std::map<Shape, Int>{{Shape{2, 1}, 1}});
    Cycle both = cycle_add(u_sigma(Shape{3}, kNone), u_sigma(Shape{2, 1}, kNone));
    CHECK(truncate_cycle(both, kBox24).terms == std::map<Shape, Int>{{Shape{2, 1}, 1}});
    CHECK_THROWS_AS(truncate_cycle(truncate_cycle(both, kBox24), kNone), std::invalid_argument);
}

TEST_CASE("e-dimension tables") {
    std::vector<long> dims24;
    for (int d = 0; d <= 4; ++d) dims24.push_back(e_dimension(kBox24, Twist::untwisted, d));
    CHECK(dims24 == std::vector<long>{1, 0, 0, 0, 1});

    for (int d = 0; d <= 9; ++d) {
        long want = (d == 0 || d == 4 || d == 5 || d == 9) ? 1 : 0;
        CHECK(e_dimension(kBox36, Twist::untwisted, d) == want);
        CHECK(e_dimension(kBox36, Twist::twisted, d) == 0);
    }
}

TEST_CASE("kernel-image split") {
    KerImSplit s4 = ker_im_split(kBox24, Twist::untwisted, 4);
    CHECK(s4.even_basis == std::vector<Shape>{Shape{2, 2}});
    CHECK(s4.im_basis.empty());
    CHECK(s4.verified);

    KerImSplit s2 = ker_im_split(kBox24, Twist::untwisted, 2);
    CHECK(s2.even_basis.empty());
    REQUIRE(s2.im_basis.size() == 1);
    CHECK(s2.im_basis.front().terms == std::map<Shape, Int>{{Shape{2}, 1}, {Shape{1, 1}, 1}});
    CHECK(s2.verified);
}

TEST_CASE("mod-2 kernel bases per component") {
    std::vector<Cycle> b2 = ker_sq2_basis(kBox24, Twist::untwisted, 2);
    REQUIRE(b2.size() == 1);
    CHECK(b2.front().terms == std::map<Shape, Int>{{Shape{2}, 1}, {Shape{1, 1}, 1}});

    std::vector<Cycle> b3 = ker_sq2_basis(kBox24, Twist::untwisted, 3);
    REQUIRE(b3.size() == 1);
    CHECK(b3.front().terms == std::map<Shape, Int>{{Shape{2, 1}, 1}});
}

TEST_CASE("integral kernel bases and the lattice oracle") {
    std::vector<Shape> basis1 = degree_basis(kBox24, Twist::untwisted, 1);
    std::vector<Cycle> p1 = ker_sq2_pi_basis(kBox24, Twist::untwisted, 1);
    REQUIRE(p1.size() == 1);
    CHECK(p1.front().terms == std::map<Shape, Int>{{Shape{1}, 2}});

    std::vector<Cycle> p0 = ker_sq2_pi_basis(kBox24, Twist::untwisted, 0);
    REQUIRE(p0.size() == 1);
    CHECK(p0.front().terms == std::map<Shape, Int>{{Shape{}, 1}});

    // degree 2: {Sq2(sigma_1), 2 sigma_{1,1}} is lattice-equal to
    // {2 sigma_2, sigma_2 + sigma_{1,1}}
    std::vector<Shape> basis2 = degree_basis(kBox24, Twist::untwisted, 2);
    IntMat got;
    for (const Cycle& c : ker_sq2_pi_basis(kBox24, Twist::untwisted, 2))
        got.push_back(cycle_vector(c, basis2));
    Cycle alt1 = u_sigma(Shape{2}, kBox24, Ring::integral);
    alt1 = cycle_scale(alt1, 2);
    Cycle alt2 = cycle_add(u_sigma(Shape{2}, kBox24), u_sigma(Shape{1, 1}, kBox24));
    IntMat want{cycle_vector(alt1, basis2), cycle_vector(alt2, basis2)};
    CHECK(lattice_equal(got, want));
    CHECK(hermite_normal_form(got) == ker_sq2_pi_lattice_oracle(kBox24, Twist::untwisted, 2));
}

TEST_CASE("doubling") {
    CHECK(doubled_shape(Shape{1}) == Shape{2, 2});
    CHECK(doubled_shape(Shape{}) == Shape{});
    CHECK(doubled_shape(Shape{2, 1}) == Shape{4, 4, 2, 2});
    CHECK_THROWS_AS(doubling(sigma(Shape{1}, Ring::mod2, Twist::untwisted, kNone), kBox24),
                    std::invalid_argument);
    CHECK_THROWS_AS(doubling(sigma(Shape{1}, Ring::integral, Twist::twisted, kNone), kBox24),
                    std::invalid_argument);
    Cycle d = doubling(u_sigma(Shape{1}, Truncation::box(1, 2)), kBox24);
    CHECK(d.terms == std::map<Shape, Int>{{Shape{2, 2}, 1}});
    CHECK(doubling_preimage(Shape{2, 2}) == Shape{1});
    CHECK_FALSE(doubling_preimage(Shape{2, 1}).has_value());
    // degree-i basis of the halved box doubles onto the evens of Gr(2,4)
    std::set<Shape> image;
    for (const auto& list : enumerate_tableaux(Truncation::box(1, 2), Twist::untwisted))
        for (const Tableau& t : list) image.insert(doubled_shape(t.shape));
    CHECK(image == std::set<Shape>{Shape{}, Shape{2, 2}});
}

TEST_CASE("schubert products") {
    Cycle p = schubert_product(u_sigma(Shape{1}, kNone), u_sigma(Shape{1}, kNone));
    CHECK(p.terms == std::map<Shape, Int>{{Shape{2}, 1}, {Shape{1, 1}, 1}});

    Cycle q = schubert_product(u_sigma(Shape{2}, kNone), u_sigma(Shape{2}, kNone));
    CHECK(q.terms ==
          std::map<Shape, Int>{{Shape{4}, 1}, {Shape{3, 1}, 1}, {Shape{2, 2}, 1}});

    Truncation line = Truncation::box(1, 3);
    Cycle r = schubert_product(u_sigma(Shape{1}, line), u_sigma(Shape{1}, line));
    CHECK(r.terms == std::map<Shape, Int>{{Shape{2}, 1}});

    // twists compose additively
    Cycle tw = schubert_product(sigma(Shape{1}, Ring::integral, Twist::twisted, kBox24),
                                sigma(Shape{1}, Ring::integral, Twist::twisted, kBox24));
    CHECK(tw.twist == Twist::untwisted);
}

TEST_CASE("square-to-doubling identity") {
    CHECK(giambelli_identity_check(1));
    CHECK(giambelli_identity_check(2));
    CHECK(giambelli_identity_check(3));
}

TEST_CASE("sq2 matrix layout") {
    Sq2Matrix sm = sq2_matrix(kBox24, Twist::untwisted, 1);
    REQUIRE(sm.source.size() == 1);
    REQUIRE(sm.target.size() == 2);
    // column of sigma_1 has ones at both degree-2 shapes
    CHECK(sm.m.get(0, 0));
    CHECK(sm.m.get(1, 0));
}
