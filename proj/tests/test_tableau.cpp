#include <doctest.h>

#include "mw/tableau.hpp"

using namespace mw;

namespace {
const Truncation kBox24 = Truncation::box(2, 4);
const Truncation kBox36 = Truncation::box(3, 6);
}  // namespace

TEST_CASE("checkerboard coloring anchors") {
    CHECK_FALSE(box_is_white(Twist::untwisted, 1, 1));
    CHECK(box_is_white(Twist::twisted, 1, 1));
    CHECK(box_is_white(Twist::untwisted, 2, 3));
    CHECK(box_is_white(Twist::untwisted, 1, 2));
    CHECK_FALSE(box_is_white(Twist::twisted, 1, 2));
    CHECK_THROWS_AS(box_is_white(Twist::untwisted, 0, 1), std::invalid_argument);
}

TEST_CASE("addable positions") {
    CHECK(addable_rows(Tableau{Shape{3, 2, 1}, Twist::untwisted}, kBox36) == std::vector<int>{2, 3});
    CHECK(addable_rows(Tableau{Shape{}, Twist::untwisted}, kBox24).empty());
    CHECK(addable_rows(Tableau{Shape{}, Twist::twisted}, kBox24) == std::vector<int>{1});
    CHECK_THROWS_AS(addable_rows(Tableau{Shape{5}, Twist::untwisted}, kBox24), std::invalid_argument);
}

TEST_CASE("removable positions") {
    CHECK(removable_rows(Tableau{Shape{3, 2, 1}, Twist::untwisted}, kBox36).empty());
    auto shapes = remove_shapes(Tableau{Shape{3, 2, 1}, Twist::twisted}, kBox36);
    std::set<Shape> got(shapes.begin(), shapes.end());
    CHECK(got == std::set<Shape>{Shape{2, 2, 1}, Shape{3, 1, 1}, Shape{3, 2}});
    CHECK(removable_rows(Tableau{Shape{}, Twist::untwisted}, kBox24).empty());
    CHECK(removable_rows(Tableau{Shape{}, Twist::twisted}, kBox24).empty());
}

TEST_CASE("growing by position subsets") {
    Tableau t{Shape{3, 2, 1}, Twist::untwisted};
    CHECK(add_boxes(t, kBox36, {1}).shape == Shape{3, 3, 1});
    CHECK(add_boxes(t, kBox36, {2}).shape == Shape{3, 2, 2});
    CHECK(add_boxes(t, kBox36, {1, 2}).shape == Shape{3, 3, 2});
    CHECK(add_boxes(t, kBox36, {}).shape == Shape{3, 2, 1});
    CHECK(add_boxes(Tableau{Shape{1}, Twist::untwisted}, kBox24, {2}).shape == Shape{1, 1});
    CHECK_THROWS_AS(add_boxes(t, kBox36, {3}), std::out_of_range);
    CHECK_THROWS_AS(add_boxes(t, kBox36, {2, 1}), std::invalid_argument);
}

TEST_CASE("classification") {
    CHECK(classify(Tableau{Shape{2, 2}, Twist::untwisted}, kBox24).even);
    TableauClass c = classify(Tableau{Shape{1}, Twist::untwisted}, kBox24);
    CHECK(c.irredundant);
    CHECK_FALSE(c.full);
    CHECK(classify(Tableau{Shape{2}, Twist::twisted}, kBox24).even);
    CHECK(classify(Tableau{Shape{1, 1}, Twist::twisted}, kBox24).even);
    // the empty shape: even untwisted, irredundant-not-full twisted
    CHECK(classify(Tableau{Shape{}, Twist::untwisted}, kBox24).even);
    TableauClass e = classify(Tableau{Shape{}, Twist::twisted}, kBox24);
    CHECK(e.irredundant);
    CHECK_FALSE(e.full);
}

TEST_CASE("closed-form even classification") {
    CHECK(even_closed_form(Tableau{Shape{3, 3, 3}, Twist::untwisted}, kBox36));
    CHECK(even_closed_form(Tableau{Shape{3, 1, 1}, Twist::untwisted}, kBox36));
    for (const auto& list : enumerate_tableaux(kBox36, Twist::twisted))
        for (const Tableau& t : list) CHECK_FALSE(even_closed_form(t, kBox36));
    CHECK(even_closed_form(Tableau{Shape{}, Twist::untwisted}, Truncation::none()));
    CHECK_FALSE(even_closed_form(Tableau{Shape{}, Twist::twisted}, Truncation::none()));
}

TEST_CASE("closure") {
    std::set<Shape> cl = closure(Tableau{Shape{1}, Twist::untwisted}, kBox24);
    CHECK(cl == std::set<Shape>{Shape{1}, Shape{2}, Shape{1, 1}, Shape{2, 1}});
    CHECK(closure(Tableau{Shape{2, 2}, Twist::untwisted}, kBox24) == std::set<Shape>{Shape{2, 2}});
}

TEST_CASE("enumeration and counts") {
    CHECK(degree_counts(kBox24, Twist::untwisted) == std::vector<long>{1, 1, 2, 1, 1});
    // single-row truncations: n+1 shapes (m), 0 <= m <= n
    for (int n = 1; n <= 6; ++n) {
        auto lists = enumerate_tableaux(Truncation::box(1, n + 1), Twist::untwisted);
        long total = 0;
        for (const auto& l : lists) {
            CHECK(l.size() == 1);
            total += static_cast<long>(l.size());
        }
        CHECK(total == n + 1);
    }
    long total36 = 0;
    for (long c : degree_counts(kBox36, Twist::untwisted)) total36 += c;
    CHECK(total36 == 20);
    CHECK_THROWS_AS(enumerate_tableaux(Truncation::none(), Twist::untwisted), std::invalid_argument);
    // degree lists are lexicographically sorted
    auto lists = enumerate_tableaux(kBox36, Twist::untwisted);
    CHECK(lists[2][0].shape == Shape{1, 1});
    CHECK(lists[2][1].shape == Shape{2});
}

TEST_CASE("transpose") {
    CHECK(transpose(Shape{3, 2, 1}) == Shape{3, 2, 1});
    CHECK(transpose(Shape{3, 1}) == Shape{2, 1, 1});
    CHECK(transpose(Shape{2, 2}) == Shape{2, 2});
    CHECK(transpose(Shape{}) == Shape{});
}

TEST_CASE("irredundant components") {
    Components c = irredundant_components(kBox24, Twist::untwisted);
    REQUIRE(c.members.size() == 3);
    CHECK(c.members.at(Shape{}).size() == 1);
    CHECK(c.members.at(Shape{1}).size() == 4);
    CHECK(c.members.at(Shape{2, 2}).size() == 1);

    Components tw = irredundant_components(kBox24, Twist::twisted);
    std::set<Shape> roots;
    for (const auto& [root, members] : tw.members) roots.insert(root);
    CHECK(roots == std::set<Shape>{Shape{}, Shape{2}, Shape{1, 1}, Shape{2, 1}});

    long total = 0;
    for (const auto& [root, members] : tw.members) total += static_cast<long>(members.size());
    CHECK(total == 6);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(Shape({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Shape({2, -1}), std::invalid_argument);
    CHECK(Shape({2, 1, 0}).row_count() == 2);  // trailing zeros stripped
    CHECK(Shape{3, 2, 1}.degree() == 6);
}
