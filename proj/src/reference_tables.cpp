#include "mw/reference_tables.hpp"

namespace mw::reference {

using Line = std::vector<std::pair<Int, Shape>>;

std::vector<Shape> even_untwisted_2_4() { return {Shape{}, Shape{2, 2}}; }

std::vector<Shape> even_untwisted_3_6() {
    return {Shape{}, Shape{2, 2}, Shape{3, 1, 1}, Shape{3, 3, 3}};
}

std::vector<Shape> even_twisted_2_4() { return {Shape{2}, Shape{1, 1}}; }

std::vector<Shape> irredundant_untwisted_2_4() {
    return {Shape{}, Shape{1}, Shape{2, 2}};
}

std::vector<ChowWittTable> chow_witt_tables() {
    std::vector<ChowWittTable> tables;

    {
        ChowWittTable t;
        t.k = 2;
        t.n = 4;
        t.twist = Twist::untwisted;
        t.gw = even_untwisted_2_4();
        t.z = {
            Line{{2, Shape{1}}},
            Line{{2, Shape{2}}},
            Line{{1, Shape{2, 1}}},
            Line{{1, Shape{2}}, {1, Shape{1, 1}}},
        };
        tables.push_back(std::move(t));
    }
    {
        ChowWittTable t;
        t.k = 3;
        t.n = 6;
        t.twist = Twist::untwisted;
        t.gw = even_untwisted_3_6();
        t.z = {
            Line{{2, Shape{1}}},
            Line{{1, Shape{2}}, {1, Shape{1, 1}}},
            Line{{2, Shape{2}}},
            Line{{1, Shape{2, 1}}},
            Line{{2, Shape{3}}},
            Line{{1, Shape{3, 1}}},
            Line{{2, Shape{1, 1, 1}}},
            Line{{1, Shape{2, 1, 1}}},
            Line{{2, Shape{3, 2}}},
            Line{{1, Shape{3, 3}}},
            Line{{2, Shape{2, 2, 1}}},
            Line{{1, Shape{2, 2, 2}}},
            Line{{2, Shape{3, 2, 1}}},
            Line{{2, Shape{3, 3, 1}}},
            Line{{1, Shape{3, 3, 1}}, {1, Shape{3, 2, 2}}},
            Line{{1, Shape{3, 3, 2}}},
        };
        tables.push_back(std::move(t));
    }
    {
        ChowWittTable t;
        t.k = 2;
        t.n = 4;
        t.twist = Twist::twisted;
        t.gw = even_twisted_2_4();
        t.z = {
            Line{{2, Shape{}}},
            Line{{1, Shape{1}}},
            Line{{2, Shape{2, 1}}},
            Line{{1, Shape{2, 2}}},
        };
        tables.push_back(std::move(t));
    }
    {
        ChowWittTable t;
        t.k = 3;
        t.n = 6;
        t.twist = Twist::twisted;
        t.gw = {};  // the free Witt part vanishes here
        t.z = {
            Line{{2, Shape{}}},
            Line{{1, Shape{1}}},
            Line{{2, Shape{2}}},
            Line{{1, Shape{3}}},
            Line{{2, Shape{1, 1}}},
            Line{{1, Shape{1, 1, 1}}},
            Line{{2, Shape{2, 1}}},
            Line{{2, Shape{3, 1}}},
            Line{{2, Shape{2, 2}}},
            Line{{2, Shape{3, 2}}},
            Line{{1, Shape{3, 1}}, {1, Shape{2, 2}}, {1, Shape{2, 1, 1}}},
            Line{{1, Shape{3, 2}}, {1, Shape{3, 1, 1}}},
            Line{{1, Shape{3, 2}}, {1, Shape{2, 2, 1}}},
            Line{{1, Shape{3, 2, 1}}},
            Line{{2, Shape{3, 3}}},
            Line{{1, Shape{3, 3, 1}}},
            Line{{2, Shape{2, 2, 2}}},
            Line{{1, Shape{3, 2, 2}}},
            Line{{2, Shape{3, 3, 2}}},
            Line{{1, Shape{3, 3, 3}}},
        };
        tables.push_back(std::move(t));
    }
    return tables;
}

}  // namespace mw::reference
