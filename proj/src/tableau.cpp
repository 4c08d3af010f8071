#include "mw/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mw {

bool box_is_white(Twist twist, int r, int c) {
    if (r < 1 || c < 1) throw std::invalid_argument("box coordinates are 1-based");
    bool parity_odd = (r + c) % 2 == 1;
    return twist == Twist::untwisted ? parity_odd : !parity_odd;
}

static void require_admissible(const Tableau& t, const Truncation& tr) {
    if (!tr.admissible(t.shape))
        throw std::invalid_argument("shape " + t.shape.str() + " is not admissible for the truncation");
}

std::vector<int> addable_rows(const Tableau& t, const Truncation& tr) {
    require_admissible(t, tr);
    std::vector<int> rows;
    const int last = t.shape.row_count();
    const int row_cap = tr.max_rows();
    const int col_cap = tr.max_cols();
    for (int r = 1; r <= std::min(last + 1, row_cap); ++r) {
        int new_len = t.shape.row(r) + 1;
        if (r == 1) {
            if (new_len > col_cap) continue;
        } else {
            if (new_len > t.shape.row(r - 1)) continue;
        }
        if (box_is_white(t.twist, r, new_len)) rows.push_back(r);
    }
    return rows;
}

std::vector<int> removable_rows(const Tableau& t, const Truncation& tr) {
    require_admissible(t, tr);
    std::vector<int> rows;
    for (int r = 1; r <= t.shape.row_count(); ++r) {
        int len = t.shape.row(r);
        if (len <= t.shape.row(r + 1)) continue;  // would break monotonicity
        if (box_is_white(t.twist, r, len)) rows.push_back(r);
    }
    return rows;
}

static Shape bump_rows(const Shape& s, const std::vector<int>& rows) {
    std::vector<int> v = s.rows();
    for (int r : rows) {
        if (r == static_cast<int>(v.size()) + 1)
            v.push_back(1);
        else
            v[r - 1] += 1;
    }
    return Shape(v);
}

std::vector<Shape> add_shapes(const Tableau& t, const Truncation& tr) {
    std::vector<Shape> out;
    for (int r : addable_rows(t, tr)) out.push_back(bump_rows(t.shape, {r}));
    return out;
}

std::vector<Shape> remove_shapes(const Tableau& t, const Truncation& tr) {
    std::vector<Shape> out;
    for (int r : removable_rows(t, tr)) {
        std::vector<int> v = t.shape.rows();
        v[r - 1] -= 1;
        out.push_back(Shape(v));
    }
    return out;
}

Tableau add_boxes(const Tableau& t, const Truncation& tr, const std::vector<int>& positions) {
    std::vector<int> addable = addable_rows(t, tr);
    std::vector<int> rows;
    int prev = 0;
    for (int p : positions) {
        if (p <= prev) throw std::invalid_argument("positions must be strictly increasing");
        if (p < 1 || p > static_cast<int>(addable.size()))
            throw std::out_of_range("addable position out of range");
        rows.push_back(addable[p - 1]);
        prev = p;
    }
    return Tableau{bump_rows(t.shape, rows), t.twist};
}

TableauClass classify(const Tableau& t, const Truncation& tr) {
    TableauClass c;
    c.irredundant = removable_rows(t, tr).empty();
    c.full = addable_rows(t, tr).empty();
    c.even = c.irredundant && c.full;
    return c;
}

bool completely_even(const Shape& s) {
    const auto& v = s.rows();
    if (v.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < v.size(); i += 2) {
        if (v[i] != v[i + 1] || v[i] % 2 != 0) return false;
    }
    return true;
}

bool even_closed_form(const Tableau& t, const Truncation& tr) {
    require_admissible(t, tr);
    const Shape& s = t.shape;
    if (!tr.truncated()) {
        // Untruncated: a twisted tableau is never full (rows are forced to
        // pair with odd lengths, but fullness needs an odd row count).
        return t.twist == Twist::untwisted && completely_even(s);
    }
    const int k = tr.k(), n = tr.n(), cols = n - k;
    if (k == 0 || cols == 0) return s.empty();  // point: the empty shape only

    if (t.twist == Twist::untwisted) {
        if (completely_even(s)) return true;
        if ((k % 2) * (cols % 2) == 0) return false;
        // Hook family (k(n-k) odd): exactly k rows, first row n-k, the rest
        // odd, and after subtracting 1 from each the nonzero part pairs up.
        if (s.row_count() != k || s.row(1) != cols) return false;
        std::vector<int> rest;
        for (int r = 2; r <= k; ++r) {
            if (s.row(r) % 2 == 0) return false;
            if (s.row(r) > 1) rest.push_back(s.row(r) - 1);
        }
        return completely_even(Shape(rest));
    }

    // Twisted (k,n)-truncated.
    bool k_even = k % 2 == 0, n_even = n % 2 == 0;
    if (!k_even && n_even) return false;
    bool allow_top = (k_even == n_even);            // sigma_{n-k} T families
    bool allow_column = k_even;                     // sigma_{1^k} T families
    if (allow_top && s.row(1) == cols && !s.empty()) {
        std::vector<int> rest(s.rows().begin() + 1, s.rows().end());
        if (completely_even(Shape(rest))) return true;
    }
    if (allow_column && s.row_count() == k && k > 0) {
        std::vector<int> rest;
        for (int r = 1; r <= k; ++r)
            if (s.row(r) > 1) rest.push_back(s.row(r) - 1);
        if (completely_even(Shape(rest))) return true;
    }
    return false;
}

std::set<Shape> closure(const Tableau& t, const Truncation& tr) {
    std::set<Shape> seen{t.shape};
    std::vector<Shape> frontier{t.shape};
    while (!frontier.empty()) {
        std::vector<Shape> next;
        for (const Shape& s : frontier) {
            for (const Shape& a : add_shapes(Tableau{s, t.twist}, tr)) {
                if (seen.insert(a).second) next.push_back(a);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<std::vector<Tableau>> enumerate_tableaux(const Truncation& tr, Twist twist,
                                                     int max_degree) {
    if (!tr.truncated() && max_degree < 0)
        throw std::invalid_argument("untruncated enumeration needs a degree bound");
    int top = tr.truncated() ? tr.max_rows() * tr.max_cols() : max_degree;
    if (max_degree >= 0) top = std::min(top, max_degree);

    std::vector<std::vector<Tableau>> by_degree(top + 1);
    // DFS over weakly decreasing rows; rows are added top-down so lex order
    // within a degree comes from a final sort.
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int prev_len, int used) {
        by_degree[used].push_back(Tableau{Shape(cur), twist});
        if (static_cast<int>(cur.size()) >= tr.max_rows()) return;
        int cap = std::min(prev_len, top - used);
        for (int len = 1; len <= cap; ++len) {
            cur.push_back(len);
            rec(len, used + len);
            cur.pop_back();
        }
    };
    rec(std::min(tr.max_cols(), top), 0);
    for (auto& list : by_degree)
        std::sort(list.begin(), list.end(),
                  [](const Tableau& a, const Tableau& b) { return a.shape.rows() < b.shape.rows(); });
    return by_degree;
}

std::vector<long> degree_counts(const Truncation& tr, Twist twist, int max_degree) {
    std::vector<long> counts;
    for (const auto& list : enumerate_tableaux(tr, twist, max_degree))
        counts.push_back(static_cast<long>(list.size()));
    return counts;
}

Shape transpose(const Shape& s) {
    std::vector<int> cols(s.row(1), 0);
    for (int r = 1; r <= s.row_count(); ++r)
        for (int c = 0; c < s.row(r); ++c) cols[c] += 1;
    return Shape(cols);
}

Shape irredundant_root(const Tableau& t, const Truncation& tr) {
    Tableau cur = t;
    for (;;) {
        std::vector<int> rem = removable_rows(cur, tr);
        if (rem.empty()) return cur.shape;
        std::vector<int> v = cur.shape.rows();
        v[rem.front() - 1] -= 1;
        cur.shape = Shape(v);
    }
}

Components irredundant_components(const Truncation& tr, Twist twist, int max_degree) {
    Components comp;
    for (const auto& list : enumerate_tableaux(tr, twist, max_degree)) {
        for (const Tableau& t : list) {
            Shape root = irredundant_root(t, tr);
            comp.root_of[t.shape] = root;
            comp.members[root].insert(t.shape);
        }
    }
    return comp;
}

}  // namespace mw
