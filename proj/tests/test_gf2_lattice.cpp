#include <doctest.h>

#include "mw/gf2.hpp"
#include "mw/lattice.hpp"

#include <random>

using namespace mw;

TEST_CASE("gf2 rank and kernel") {
    Gf2Matrix m(2, 3);
    m.set(0, 0);
    m.set(0, 1);
    m.set(1, 1);
    m.set(1, 2);
    CHECK(m.rank() == 2);
    Gf2Matrix k = m.kernel_basis();
    REQUIRE(k.rows() == 1);
    // kernel vector (1,1,1)
    CHECK(k.get(0, 0));
    CHECK(k.get(0, 1));
    CHECK(k.get(0, 2));
    // solve m x = (1,1): x = (1,0,1) or any solution
    auto x = m.solve({true, true});
    REQUIRE(x.has_value());
    auto y = m.apply(*x);
    CHECK(y == std::vector<bool>{true, true});
}

TEST_CASE("gf2 inconsistent system") {
    Gf2Matrix m(2, 1);
    m.set(0, 0);
    m.set(1, 0);
    CHECK_FALSE(m.solve({true, false}).has_value());
}

TEST_CASE("hermite form canonicalizes spans") {
    // {2e2, e1+e2} and {2e1, e1+e2} span the same lattice
    IntMat a = {{Int(0), Int(2)}, {Int(1), Int(1)}};
    IntMat b = {{Int(2), Int(0)}, {Int(1), Int(1)}};
    CHECK(lattice_equal(a, b));
    CHECK_FALSE(lattice_equal({{Int(1)}}, {{Int(2)}}));
    CHECK(lattice_equal(IntMat{}, IntMat{}));
    // zero rows are dropped
    CHECK(hermite_normal_form({{Int(0), Int(0)}}).empty());
}

TEST_CASE("lattice membership") {
    IntMat basis = {{Int(2), Int(0)}, {Int(1), Int(1)}};
    CHECK(lattice_contains(basis, {Int(3), Int(1)}));
    CHECK(lattice_contains(basis, {Int(0), Int(0)}));
    CHECK_FALSE(lattice_contains(basis, {Int(0), Int(1)}));  // index-2 sublattice
    CHECK(lattice_contains(basis, {Int(1), Int(-1)}));
}

TEST_CASE("hermite pivots are reduced") {
    IntMat h = hermite_normal_form({{Int(4), Int(1)}, {Int(6), Int(1)}});
    // expected canonical form {{2, 0}, {0, 1}} for the span of (4,1),(6,1)
    REQUIRE(h.size() == 2);
    CHECK(h[0] == IntVec{Int(2), Int(0)});
    CHECK(h[1] == IntVec{Int(0), Int(1)});
}

TEST_CASE("hermite form is a span invariant") {
    std::mt19937_64 rng(7);
    auto rand_small = [&](int span) { return Int(static_cast<long>(rng() % (2 * span + 1)) - span); };
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
        IntMat a(rows, IntVec(cols));
        for (auto& r : a)
            for (auto& x : r) x = rand_small(6);

        IntMat h = hermite_normal_form(a);
        CHECK(hermite_normal_form(h) == h);  // idempotent

        // random unimodular row operations keep the span
        IntMat b = a;
        for (int op = 0; op < 8; ++op) {
            std::size_t i = rng() % rows, j = rng() % rows;
            switch (rng() % 3) {
                case 0:
                    if (i != j) {
                        Int m = rand_small(3);
                        for (std::size_t c = 0; c < cols; ++c) b[i][c] += m * b[j][c];
                    }
                    break;
                case 1:
                    std::swap(b[i], b[j]);
                    break;
                default:
                    for (std::size_t c = 0; c < cols; ++c) b[i][c] = -b[i][c];
            }
        }
        CHECK(hermite_normal_form(b) == h);

        // any integer combination of rows is a member
        IntVec v(cols, Int(0));
        for (const IntVec& r : a) {
            Int m = rand_small(4);
            for (std::size_t c = 0; c < cols; ++c) v[c] += m * r[c];
        }
        CHECK(lattice_contains(a, v));
    }
}

TEST_CASE("gf2 rank is a row-op invariant and kernels annihilate") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 2) m.set(r, c);
        std::size_t rank = m.rank();
        Gf2Matrix shuffled = m;
        for (int op = 0; op < 6; ++op) {
            std::size_t i = rng() % rows, j = rng() % rows;
            if (i != j && rng() % 2)
                shuffled.xor_rows(i, j);
            else
                shuffled.swap_rows(i, j);
        }
        CHECK(shuffled.rank() == rank);

        Gf2Matrix kernel = m.kernel_basis();
        CHECK(kernel.rows() == cols - rank);
        for (std::size_t r = 0; r < kernel.rows(); ++r) {
            std::vector<bool> v = kernel.row(r);
            for (bool bit : m.apply(v)) CHECK_FALSE(bit);
        }
    }
}
