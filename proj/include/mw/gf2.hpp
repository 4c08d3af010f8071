#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace mw {

// Dense GF(2) matrix, rows packed into 64-bit words. Dimensions here are
// per-degree tableau counts, so everything fits in a handful of words; the
// suites just run very many of these.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (word(r, c / 64) >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        uint64_t mask = uint64_t(1) << (c % 64);
        if (v)
            word(r, c / 64) |= mask;
        else
            word(r, c / 64) &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) { word(r, c / 64) ^= uint64_t(1) << (c % 64); }

    void xor_rows(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < wpr_; ++w) word(dst, w) ^= word(src, w);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < wpr_; ++w) std::swap(word(a, w), word(b, w));
    }
    bool row_empty(std::size_t r) const {
        for (std::size_t w = 0; w < wpr_; ++w)
            if (word(r, w)) return false;
        return true;
    }

    std::vector<bool> row(std::size_t r) const {
        std::vector<bool> v(cols_);
        for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
        return v;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const {
        Gf2Matrix copy = *this;
        return copy.rref().size();
    }

    // Basis of {x : M x = 0}, one vector per row of the result.
    Gf2Matrix kernel_basis() const;

    // Some x with M x = b, if any.
    std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const;

    // M * x over GF(2).
    std::vector<bool> apply(const std::vector<bool>& x) const;

private:
    uint64_t& word(std::size_t r, std::size_t w) { return bits_[r * wpr_ + w]; }
    const uint64_t& word(std::size_t r, std::size_t w) const { return bits_[r * wpr_ + w]; }

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
};

// Rank of the row span of a list of GF(2) vectors.
std::size_t gf2_rank_of(const std::vector<std::vector<bool>>& rows);

}  // namespace mw
