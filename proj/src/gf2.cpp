#include "mw/gf2.hpp"

namespace mw {

std::vector<std::size_t> Gf2Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && !get(p, c)) ++p;
        if (p == rows_) continue;
        swap_rows(r, p);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && get(i, c)) xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Gf2Matrix Gf2Matrix::kernel_basis() const {
    Gf2Matrix work = *this;
    std::vector<std::size_t> pivots = work.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Gf2Matrix basis(free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t f = free_cols[i];
        basis.set(i, f);
        // pivot row j has its pivot at pivots[j]; solve backwards
        for (std::size_t j = 0; j < pivots.size(); ++j)
            if (work.get(j, f)) basis.set(i, pivots[j]);
    }
    return basis;
}

std::optional<std::vector<bool>> Gf2Matrix::solve(const std::vector<bool>& b) const {
    Gf2Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) aug.set(r, c);
        if (b[r]) aug.set(r, cols_);
    }
    std::size_t r = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivot_at;  // (row, col)
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && !aug.get(p, c)) ++p;
        if (p == rows_) continue;
        aug.swap_rows(r, p);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && aug.get(i, c)) aug.xor_rows(i, r);
        pivot_at.push_back({r, c});
        ++r;
    }
    for (std::size_t i = r; i < rows_; ++i)
        if (aug.get(i, cols_)) return std::nullopt;  // inconsistent
    std::vector<bool> x(cols_, false);
    for (auto [row, col] : pivot_at) x[col] = aug.get(row, cols_);
    return x;
}

std::vector<bool> Gf2Matrix::apply(const std::vector<bool>& x) const {
    std::vector<bool> y(rows_, false);
    for (std::size_t r = 0; r < rows_; ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= (get(r, c) && x[c]);
        y[r] = acc;
    }
    return y;
}

std::size_t gf2_rank_of(const std::vector<std::vector<bool>>& rows) {
    if (rows.empty()) return 0;
    Gf2Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c]) m.set(r, c);
    return m.rank();
}

}  // namespace mw
