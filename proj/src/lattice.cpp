#include "mw/lattice.hpp"

#include <algorithm>

namespace mw {

static bool row_zero(const IntVec& r) {
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

IntMat hermite_normal_form(IntMat rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        // gcd all entries of column c into one row via Euclidean row ops
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool cleared = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Int q = rows[r][c] / rows[top][c];
                for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= q * rows[top][j];
                if (rows[r][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) rows[top][j] = -rows[top][j];
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t r = 0; r < top; ++r) {
            Int q = rows[r][c] / rows[top][c];
            if (rows[r][c] - q * rows[top][c] < 0) q -= 1;
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= q * rows[top][j];
        }
        ++top;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(), row_zero), rows.end());
    return rows;
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
    return hermite_normal_form(a) == hermite_normal_form(b);
}

bool lattice_contains(const IntMat& basis, const IntVec& v) {
    IntMat h = hermite_normal_form(basis);
    IntVec w = v;
    // Pivot columns strictly increase down the HNF rows, so reducing in order
    // decides membership: each pivot must divide the matching coordinate.
    for (const IntVec& row : h) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size()) continue;
        if (w[c] % row[c] != 0) return false;
        Int q = w[c] / row[c];
        if (q != 0)
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * row[j];
    }
    return row_zero(w);
}

}  // namespace mw
