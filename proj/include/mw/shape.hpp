#pragma once

#include <compare>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mw {

// A Young diagram shape: weakly decreasing positive row lengths, top to bottom.
// The empty shape is valid.
class Shape {
public:
    Shape() = default;

    explicit Shape(std::vector<int> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0)
                throw std::invalid_argument("shape rows must be positive");
            if (i > 0 && rows_[i] > rows_[i - 1])
                throw std::invalid_argument("shape rows must be weakly decreasing");
        }
    }

    Shape(std::initializer_list<int> rows) : Shape(std::vector<int>(rows)) {}

    const std::vector<int>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }

    // 1-based row length; 0 beyond the last row.
    int row(int r) const {
        return (r >= 1 && r <= row_count()) ? rows_[r - 1] : 0;
    }

    int degree() const {
        int d = 0;
        for (int r : rows_) d += r;
        return d;
    }

    bool operator==(const Shape&) const = default;

    std::string str() const {
        if (rows_.empty()) return "()";
        std::string s = "(";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rows_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> rows_;
};

// Deterministic order: by degree, then lexicographically on row lengths.
// Fixes enumeration order, matrix indexing and JSON output.
inline bool operator<(const Shape& a, const Shape& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.rows() < b.rows();
}

enum class Twist { untwisted, twisted };

inline Twist operator^(Twist a, Twist b) {
    return a == b ? Twist::untwisted : Twist::twisted;
}

inline const char* twist_name(Twist t) {
    return t == Twist::twisted ? "twisted" : "untwisted";
}

// Either unbounded, or the k x (n-k) box of Gr(k,n): at most k rows and
// n-k columns.
class Truncation {
public:
    static Truncation none() { return Truncation(); }

    static Truncation box(int k, int n) {
        if (k < 0 || n < 0 || k > n)
            throw std::invalid_argument("truncation requires 0 <= k <= n");
        Truncation t;
        t.k_ = k;
        t.n_ = n;
        return t;
    }

    bool truncated() const { return k_ >= 0; }
    int k() const { return k_; }
    int n() const { return n_; }

    int max_rows() const { return truncated() ? k_ : std::numeric_limits<int>::max(); }
    int max_cols() const { return truncated() ? n_ - k_ : std::numeric_limits<int>::max(); }

    bool admissible(const Shape& s) const {
        return s.row_count() <= max_rows() && s.row(1) <= max_cols();
    }

    // c is at least as restrictive as *this in both directions.
    bool refines(const Truncation& c) const {
        return c.max_rows() <= max_rows() && c.max_cols() <= max_cols();
    }

    bool operator==(const Truncation&) const = default;

private:
    int k_ = -1;
    int n_ = -1;
};

struct Tableau {
    Shape shape;
    Twist twist = Twist::untwisted;

    bool operator==(const Tableau&) const = default;
};

}  // namespace mw
