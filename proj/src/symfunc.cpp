#include "mw/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "mw/gf2.hpp"
#include "mw/lattice.hpp"
#include "mw/tableau.hpp"

namespace mw {

SchurCombo schur_zero(Ring ring, int n) { return SchurCombo{ring, n, {}}; }

static void schur_accumulate(SchurCombo& acc, const Shape& s, Int c) {
    c = ring_normalize(acc.ring, c);
    if (c == 0) return;
    Int& slot = acc.terms[s];
    slot = ring_normalize(acc.ring, slot + c);
    if (slot == 0) acc.terms.erase(s);
}

SchurCombo schur_basis(Ring ring, int n, const Shape& s) {
    SchurCombo c = schur_zero(ring, n);
    if (s.row(1) <= n) schur_accumulate(c, s, 1);
    return c;
}

SchurCombo schur_add(const SchurCombo& a, const SchurCombo& b) {
    if (a.ring != b.ring || a.num_vars != b.num_vars)
        throw std::invalid_argument("schur_add: mismatched ring or variable count");
    SchurCombo out = a;
    for (const auto& [s, c] : b.terms) schur_accumulate(out, s, c);
    return out;
}

SchurCombo schur_scale(const SchurCombo& a, const Int& c) {
    SchurCombo out = schur_zero(a.ring, a.num_vars);
    for (const auto& [s, v] : a.terms) schur_accumulate(out, s, v * c);
    return out;
}

bool schur_is_zero(const SchurCombo& a) { return a.terms.empty(); }

std::string schur_str(const SchurCombo& a) {
    if (a.terms.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : a.terms) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.str() + "*";
        out += "x" + s.str();
    }
    return out;
}

std::optional<Straightened> straighten(const std::vector<int>& index, int n) {
    const int l = static_cast<int>(index.size());
    std::vector<int> c(l);
    for (int i = 0; i < l; ++i) c[i] = index[i] - (i + 1);
    // sign of the sort permutation; equal entries mean a repeated row
    int sign = 1;
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            if (c[i] == c[j]) return std::nullopt;
            if (c[i] < c[j]) {
                std::swap(c[i], c[j]);
                sign = -sign;
            }
        }
    }
    std::vector<int> parts(l);
    for (int i = 0; i < l; ++i) {
        parts[i] = c[i] + (i + 1);
        if (parts[i] < 0) return std::nullopt;
    }
    if (!parts.empty() && parts[0] > n) return std::nullopt;
    return Straightened{sign, Shape(parts)};
}

GenPoly det_expand(const Shape& s, int n) {
    static std::map<std::pair<int, std::vector<int>>, GenPoly> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({n, s.rows()});
        if (it != memo.end()) return it->second;
    }

    GenPoly out;
    if (s.empty()) {
        out[{}] = 1;
    } else if (s.row(1) <= n) {
        // Laplace expansion along the first column of det(x_{a_i - i + j}):
        // the i-th minor is the index with a_i dropped and 1 added to each
        // earlier entry.
        const auto& a = s.rows();
        const int l = s.row_count();
        for (int i = 0; i < l; ++i) {
            int gen = a[i] - i;  // a_i - (i+1) + 1
            if (gen < 0 || gen > n) continue;
            std::vector<int> rest;
            rest.reserve(l - 1);
            for (int j = 0; j < l; ++j) {
                if (j == i) continue;
                rest.push_back(j < i ? a[j] + 1 : a[j]);
            }
            GenPoly minor = det_expand(Shape(rest), n);
            int sign = (i % 2 == 0) ? 1 : -1;
            for (const auto& [mono, coef] : minor) {
                GenMonomial m = mono;
                if (gen > 0) {
                    m.push_back(gen);
                    std::sort(m.begin(), m.end(), std::greater<int>());
                }
                Int& slot = out[m];
                slot += sign * coef;
                if (slot == 0) out.erase(m);
            }
        }
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(std::make_pair(n, s.rows()), std::move(out)).first->second;
}

SchurCombo pieri(Ring ring, int n, int t, const Shape& s) {
    if (t < 0) throw std::invalid_argument("pieri: negative degree");
    SchurCombo out = schur_zero(ring, n);
    if (s.row(1) > n) return out;
    if (t == 0) return schur_basis(ring, n, s);

    const int l = s.row_count();
    std::vector<int> b;
    // choose b_1 >= ... >= b_{l+1} with a_i <= b_i <= a_{i-1} (b_1 <= n),
    // sum = t + |s|; only the final entry may be zero
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == l + 2) {
            if (remaining == 0) schur_accumulate(out, Shape(b), 1);
            return;
        }
        int lo = s.row(i);  // 0 at the appended row
        int hi = std::min((i == 1) ? n : s.row(i - 1), remaining);
        for (int v = lo; v <= hi; ++v) {
            if (v > 0) b.push_back(v);
            rec(i + 1, remaining - v);
            if (v > 0) b.pop_back();
        }
    };
    rec(1, t + s.degree());
    return out;
}

static SchurCombo multiply_by_generator(const SchurCombo& a, int t) {
    SchurCombo out = schur_zero(a.ring, a.num_vars);
    for (const auto& [s, c] : a.terms)
        out = schur_add(out, schur_scale(pieri(a.ring, a.num_vars, t, s), c));
    return out;
}

static SchurCombo genpoly_to_schur(Ring ring, int n, const GenPoly& g) {
    SchurCombo out = schur_zero(ring, n);
    for (const auto& [mono, coef] : g) {
        SchurCombo acc = schur_basis(ring, n, Shape{});
        for (int t : mono) acc = multiply_by_generator(acc, t);
        out = schur_add(out, schur_scale(acc, coef));
    }
    return out;
}

SchurCombo schur_product(const SchurCombo& a, const SchurCombo& b) {
    if (a.ring != b.ring || a.num_vars != b.num_vars)
        throw std::invalid_argument("schur_product: mismatched ring or variable count");
    SchurCombo out = schur_zero(a.ring, a.num_vars);
    for (const auto& [s, c] : a.terms) {
        GenPoly g = det_expand(s, a.num_vars);
        for (const auto& [mono, coef] : g) {
            SchurCombo acc = b;
            for (int t : mono) acc = multiply_by_generator(acc, t);
            out = schur_add(out, schur_scale(acc, c * coef));
        }
    }
    return out;
}

Int lr_coefficient(const Shape& s1, const Shape& s2, const Shape& lambda) {
    if (s1.degree() + s2.degree() != lambda.degree()) return 0;
    int n = std::max(lambda.degree(), 1);
    SchurCombo p = schur_product(schur_basis(Ring::integral, n, s1),
                                 schur_basis(Ring::integral, n, s2));
    auto it = p.terms.find(lambda);
    return it == p.terms.end() ? Int(0) : it->second;
}

SchurCombo sq2_poly(const SchurCombo& a) {
    if (a.ring != Ring::mod2)
        throw std::invalid_argument("sq2_poly is defined over the mod-2 ring");
    const int n = a.num_vars;
    GenPoly total;
    for (const auto& [s, c] : a.terms) {
        GenPoly g = det_expand(s, n);
        for (const auto& [mono, coef] : g) {
            // Leibniz over the monomial; Sq2(x_i) = (i+1) x_{i+1} + x_1 x_i
            for (std::size_t pos = 0; pos < mono.size(); ++pos) {
                if (pos > 0 && mono[pos] == mono[pos - 1]) continue;  // same derivative
                int i = mono[pos];
                Int mult = 0;
                for (int g2 : mono)
                    if (g2 == i) mult += 1;
                GenMonomial rest;
                bool dropped = false;
                for (int g2 : mono) {
                    if (g2 == i && !dropped) {
                        dropped = true;
                        continue;
                    }
                    rest.push_back(g2);
                }
                auto emit = [&](GenMonomial m) {
                    std::sort(m.begin(), m.end(), std::greater<int>());
                    Int& slot = total[m];
                    slot = mod2(slot + mult * c * coef);
                    if (slot == 0) total.erase(m);
                };
                if (i + 1 <= n && (i + 1) % 2 == 1) {  // (i+1) x_{i+1}
                    GenMonomial m = rest;
                    m.push_back(i + 1);
                    emit(std::move(m));
                }
                {  // x_1 x_i
                    GenMonomial m = rest;
                    m.push_back(i);
                    m.push_back(1);
                    emit(std::move(m));
                }
            }
        }
    }
    return genpoly_to_schur(Ring::mod2, n, total);
}

SchurCombo sq2_closed_form(const Shape& s, int n) {
    SchurCombo out = schur_zero(Ring::mod2, n);
    const auto& a = s.rows();
    const int l = s.row_count();
    for (int i = 0; i < l; ++i) {
        if ((a[i] - (i + 1) + 1) % 2 == 0) continue;
        std::vector<int> idx = a;
        idx[i] += 1;
        if (auto st = straighten(idx, n)) schur_accumulate(out, st->shape, 1);
    }
    if (l % 2 == 1) {
        std::vector<int> idx = a;
        idx.push_back(1);
        if (auto st = straighten(idx, n)) schur_accumulate(out, st->shape, 1);
    }
    return out;
}

// partitions of `degree` with parts <= n (any number of rows)
static std::vector<Shape> poly_degree_basis(int n, int degree) {
    std::vector<Shape> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int maxpart, int remaining) {
        if (remaining == 0) {
            out.push_back(Shape(cur));
            return;
        }
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(p, remaining - p);
            cur.pop_back();
        }
    };
    rec(n, degree);
    std::sort(out.begin(), out.end());
    return out;
}

PolySplit ker_im_split_poly(int n, int degree) {
    std::vector<Shape> below = degree > 0 ? poly_degree_basis(n, degree - 1) : std::vector<Shape>{};
    std::vector<Shape> here = poly_degree_basis(n, degree);
    std::vector<Shape> above = poly_degree_basis(n, degree + 1);
    std::map<Shape, std::size_t> here_pos, above_pos;
    for (std::size_t i = 0; i < here.size(); ++i) here_pos[here[i]] = i;
    for (std::size_t i = 0; i < above.size(); ++i) above_pos[above[i]] = i;

    auto row_of = [](const SchurCombo& c, const std::map<Shape, std::size_t>& pos,
                     std::size_t width) {
        std::vector<bool> v(width, false);
        for (const auto& [s, coef] : c.terms) v[pos.at(s)] = is_odd(coef);
        return v;
    };

    std::vector<std::vector<bool>> im_rows;
    for (const Shape& s : below)
        im_rows.push_back(row_of(sq2_closed_form(s, n), here_pos, here.size()));

    std::vector<std::vector<bool>> out_rows;
    for (const Shape& s : here)
        out_rows.push_back(row_of(sq2_closed_form(s, n), above_pos, above.size()));

    PolySplit split;
    split.im_dim = static_cast<long>(gf2_rank_of(im_rows));
    split.ker_dim = static_cast<long>(here.size()) - static_cast<long>(gf2_rank_of(out_rows));

    std::vector<std::vector<bool>> joint = im_rows;
    long evens = 0;
    for (const Shape& s : here) {
        if (!completely_even(s)) continue;
        ++evens;
        std::vector<bool> v(here.size(), false);
        v[here_pos.at(s)] = true;
        joint.push_back(v);
    }
    split.completely_even_count = evens;
    split.verified = split.ker_dim == split.im_dim + evens &&
                     static_cast<long>(gf2_rank_of(joint)) == split.im_dim + evens;
    return split;
}

CoeffSeries::CoeffSeries(std::vector<Int> coeffs) : a(std::move(coeffs)) {
    if (a.empty() || a[0] != 1)
        throw std::invalid_argument("series must start with constant term 1");
}

CoeffSeries series_product(const CoeffSeries& f, const CoeffSeries& g) {
    // alternating-sign storage turns the product into a plain convolution
    std::vector<Int> h(f.bound() + g.bound() + 1, 0);
    for (int i = 0; i <= f.bound(); ++i)
        for (int j = 0; j <= g.bound(); ++j) h[i + j] += f.a[i] * g.a[j];
    return CoeffSeries(std::move(h));
}

std::vector<Int> inverse_column(const CoeffSeries& f, int up_to) {
    std::vector<Int> u(up_to + 1, 0);
    u[0] = 1;
    for (int m = 1; m <= up_to; ++m)
        for (int j = 1; j <= std::min(m, f.bound()); ++j)
            u[m] += (j % 2 == 1 ? f.a[j] : -f.a[j]) * u[m - j];
    return u;
}

Int jt_determinant(const CoeffSeries& f, const Shape& lambda) {
    const int l = lambda.row_count();
    if (l == 0) return 1;
    // cofactor expansion on the first row with a column mask
    std::function<Int(int, unsigned)> rec = [&](int row, unsigned mask) -> Int {
        if (row == l) return 1;
        Int acc = 0;
        int seen = 0;
        for (int col = 0; col < l; ++col) {
            if (mask & (1u << col)) continue;
            Int entry = f.coeff(lambda.row(row + 1) - (row + 1) + (col + 1));
            if (entry != 0) {
                Int sub = rec(row + 1, mask | (1u << col));
                acc += (seen % 2 == 0 ? entry : -entry) * sub;
            }
            ++seen;
        }
        return acc;
    };
    return rec(0, 0);
}

bool inversion_identities(const CoeffSeries& f, const CoeffSeries& g, int m) {
    CoeffSeries h = series_product(f, g);
    std::vector<Int> fc = inverse_column(f, m);
    std::vector<Int> gc = inverse_column(g, m);
    std::vector<Int> hc = inverse_column(h, m);
    for (int d = 0; d <= m; ++d) {
        Int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
        for (int i = 0; i <= d; ++i) {
            Int sign = (i % 2 == 0) ? 1 : -1;
            s1 += sign * gc[i] * h.coeff(d - i);
            s2 += sign * fc[i] * h.coeff(d - i);
            s3 += sign * g.coeff(i) * hc[d - i];
            s4 += sign * f.coeff(i) * hc[d - i];
        }
        if (s1 != f.coeff(d) || s2 != g.coeff(d)) return false;
        if (s3 != fc[d] || s4 != gc[d]) return false;
    }
    return true;
}

MPoly mpoly_one(int nvars) { return {{Exponents(nvars, 0), Int(1)}}; }

MPoly mpoly_add(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [e, c] : b) {
        Int& slot = out[e];
        slot += c;
        if (slot == 0) out.erase(e);
    }
    return out;
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            Int& slot = out[e];
            slot += ca * cb;
            if (slot == 0) out.erase(e);
        }
    }
    return out;
}

bool mpoly_equal(const MPoly& a, const MPoly& b) { return a == b; }

MPoly elementary_mpoly(int nvars, const std::vector<int>& vars, int i) {
    if (i == 0) return mpoly_one(nvars);
    if (i < 0 || i > static_cast<int>(vars.size())) return {};
    MPoly out;
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == i) {
            Exponents e(nvars, 0);
            for (int v : pick) e[v] = 1;
            out[e] = 1;
            return;
        }
        for (std::size_t j = from; j < vars.size(); ++j) {
            pick.push_back(vars[j]);
            rec(j + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

MPoly schur_mpoly(int nvars, const std::vector<int>& vars, const Shape& s) {
    const int l = s.row_count();
    if (l == 0) return mpoly_one(nvars);
    std::function<MPoly(int, unsigned)> rec = [&](int row, unsigned mask) -> MPoly {
        if (row == l) return mpoly_one(nvars);
        MPoly acc;
        int seen = 0;
        for (int col = 0; col < l; ++col) {
            if (mask & (1u << col)) continue;
            MPoly entry = elementary_mpoly(nvars, vars, s.row(row + 1) - (row + 1) + (col + 1));
            if (!entry.empty()) {
                MPoly term = mpoly_mul(entry, rec(row + 1, mask | (1u << col)));
                if (seen % 2 == 1)
                    for (auto& [e, c] : term) c = -c;
                acc = mpoly_add(acc, term);
            }
            ++seen;
        }
        return acc;
    };
    return rec(0, 0);
}

// partitions of total with first part <= maxpart
static std::vector<Shape> partitions_up_to(int total, int maxpart) {
    std::vector<Shape> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int mp, int remaining) {
        if (remaining == 0) {
            out.push_back(Shape(cur));
            return;
        }
        for (int p = std::min(mp, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(p, remaining - p);
            cur.pop_back();
        }
    };
    rec(std::min(maxpart, total), total);
    return out;
}

static bool shape_leq(const Shape& s, const Shape& lambda) {
    for (int r = 1; r <= s.row_count(); ++r)
        if (s.row(r) > lambda.row(r)) return false;
    return true;
}

bool lr_support_check(const Shape& lambda, int k, int n) {
    if (k < 1 || n <= k) throw std::invalid_argument("lr_support_check needs 0 < k < n");
    const int nvars = n;
    std::vector<int> avars, bvars, allvars;
    for (int i = 0; i < k; ++i) avars.push_back(i);
    for (int i = k; i < n; ++i) bvars.push_back(i);
    for (int i = 0; i < n; ++i) allvars.push_back(i);

    const int d = lambda.degree();
    MPoly c_lambda = schur_mpoly(nvars, allvars, lambda);

    // (i) LR expansion reproduces c_lambda; (ii) support of both factors
    MPoly expansion;
    for (int s = 0; s <= d; ++s) {
        for (const Shape& s1 : partitions_up_to(s, d)) {
            MPoly a_s1 = schur_mpoly(nvars, avars, s1);
            if (a_s1.empty()) continue;
            for (const Shape& s2 : partitions_up_to(d - s, d)) {
                Int c = lr_coefficient(s1, s2, lambda);
                if (c == 0) continue;
                MPoly b_s2 = schur_mpoly(nvars, bvars, s2);
                if (b_s2.empty()) continue;
                if (!shape_leq(s1, lambda) || !shape_leq(s2, lambda)) return false;
                MPoly term = mpoly_mul(a_s1, b_s2);
                for (auto& [e, v] : term) v *= c;
                expansion = mpoly_add(expansion, term);
            }
        }
    }
    if (!mpoly_equal(expansion, c_lambda)) return false;

    // (iii) span memberships over the monomial basis, exact over Z
    auto span_membership = [&](const std::vector<int>& factor_vars, int max_rows) {
        MPoly target = schur_mpoly(nvars, factor_vars, lambda);
        // collect the monomial support of all candidate products
        std::vector<MPoly> gens;
        for (int s = 0; s <= d; ++s) {
            for (const Shape& sub : partitions_up_to(s, d)) {
                if (!shape_leq(sub, lambda) || sub.row_count() > max_rows) continue;
                MPoly base = schur_mpoly(nvars, factor_vars, sub);
                if (base.empty() && !sub.empty()) continue;
                // multiply by every c-monomial of complementary degree
                for (const Shape& cm : partitions_up_to(d - s, n)) {
                    MPoly prod = base;
                    for (int part : cm.rows())
                        prod = mpoly_mul(prod, elementary_mpoly(nvars, allvars, part));
                    if (!prod.empty()) gens.push_back(std::move(prod));
                }
            }
        }
        std::map<Exponents, std::size_t> cols;
        auto note = [&](const MPoly& p) {
            for (const auto& [e, c] : p)
                if (!cols.count(e)) cols.emplace(e, cols.size());
        };
        note(target);
        for (const MPoly& g : gens) note(g);
        auto vec = [&](const MPoly& p) {
            IntVec v(cols.size(), Int(0));
            for (const auto& [e, c] : p) v[cols.at(e)] = c;
            return v;
        };
        IntMat basis;
        for (const MPoly& g : gens) basis.push_back(vec(g));
        return lattice_contains(basis, vec(target));
    };

    if (!span_membership(bvars, k)) return false;      // b_Lambda over <= k rows
    if (!span_membership(avars, n - k)) return false;  // a_Lambda over <= n-k rows
    return true;
}

}  // namespace mw
