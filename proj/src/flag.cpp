#include "mw/flag.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "mw/gf2.hpp"

namespace mw {

FlagClass flag_zero(int n) { return FlagClass{n, {}}; }

FlagClass flag_one(int n) { return FlagClass{n, {FlagMono(n, 0)}}; }

FlagClass flag_var(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("flag_var: index out of range");
    FlagMono m(n, 0);
    m[i - 1] = 1;
    return normal_form(n, {m});
}

static void xor_into(std::set<FlagMono>& acc, const FlagMono& m) {
    auto it = acc.find(m);
    if (it == acc.end())
        acc.insert(m);
    else
        acc.erase(it);
}

// monomials of h_deg(x_1..x_j) as exponent vectors over n slots
static std::vector<FlagMono> homog_monomials(int deg, int j, int n) {
    std::vector<FlagMono> out;
    FlagMono cur(n, 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == j) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[var] = e;
            rec(var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    if (j >= 1) rec(0, deg);
    else if (deg == 0) out.push_back(cur);
    return out;
}

// x_i^{n-i+1} = sum of the other monomials of h_{n-i+1}(x_1..x_i); rewriting
// the largest offending variable strictly decreases (alpha_n,...,alpha_1)
// lexicographically, so the recursion terminates.
static std::set<FlagMono> reduce_monomial(int n, const FlagMono& m) {
    static std::map<std::pair<int, FlagMono>, std::set<FlagMono>> memo;
    static std::mutex memo_mutex;
    auto key = std::make_pair(n, m);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto hit = memo.find(key);
        if (hit != memo.end()) return hit->second;
    }

    std::set<FlagMono> out;
    int bad = -1;
    for (int i = n; i >= 1; --i) {
        if (m[i - 1] > n - i) {
            bad = i;
            break;
        }
    }
    if (bad < 0) {
        out.insert(m);
    } else {
        const int power = n - bad + 1;
        FlagMono rest = m;
        rest[bad - 1] -= power;
        for (const FlagMono& h : homog_monomials(power, bad, n)) {
            if (h[bad - 1] == power) continue;  // the eliminated leading term
            FlagMono prod = rest;
            for (int i = 0; i < n; ++i) prod[i] += h[i];
            for (const FlagMono& r : reduce_monomial(n, prod)) xor_into(out, r);
        }
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

FlagClass normal_form(int n, const std::set<FlagMono>& raw) {
    FlagClass out = flag_zero(n);
    for (const FlagMono& m : raw) {
        if (static_cast<int>(m.size()) != n)
            throw std::invalid_argument("monomial arity mismatch");
        for (const FlagMono& r : reduce_monomial(n, m)) xor_into(out.monos, r);
    }
    return out;
}

FlagClass flag_add(const FlagClass& a, const FlagClass& b) {
    if (a.n != b.n) throw std::invalid_argument("flag_add: arity mismatch");
    FlagClass out = a;
    for (const FlagMono& m : b.monos) xor_into(out.monos, m);
    return out;
}

FlagClass flag_mul(const FlagClass& a, const FlagClass& b) {
    if (a.n != b.n) throw std::invalid_argument("flag_mul: arity mismatch");
    std::set<FlagMono> raw;
    for (const FlagMono& ma : a.monos) {
        for (const FlagMono& mb : b.monos) {
            FlagMono m = ma;
            for (int i = 0; i < a.n; ++i) m[i] += mb[i];
            xor_into(raw, m);
        }
    }
    return normal_form(a.n, raw);
}

bool flag_is_zero(const FlagClass& a) { return a.monos.empty(); }

int flag_degree(const FlagClass& a) {
    int d = -1;
    for (const FlagMono& m : a.monos) {
        int deg = std::accumulate(m.begin(), m.end(), 0);
        if (d < 0)
            d = deg;
        else if (d != deg)
            return -1;
    }
    return d;
}

std::string flag_str(const FlagClass& a) {
    if (a.monos.empty()) return "0";
    std::string out;
    for (const FlagMono& m : a.monos) {
        if (!out.empty()) out += " + ";
        std::string term;
        for (int i = 0; i < a.n; ++i) {
            if (m[i] == 0) continue;
            term += "x" + std::to_string(i + 1);
            if (m[i] > 1) term += "^" + std::to_string(m[i]);
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

FlagClass sq2_flag(const FlagClass& a) {
    std::set<FlagMono> raw;
    for (const FlagMono& m : a.monos) {
        for (int i = 0; i < a.n; ++i) {
            if (m[i] % 2 == 0) continue;
            FlagMono up = m;
            up[i] += 1;
            xor_into(raw, up);
        }
    }
    return normal_form(a.n, raw);
}

FlagClass complete_homog(int deg, int j, int n) {
    if (j > n) throw std::invalid_argument("complete_homog: j exceeds the variable count");
    std::set<FlagMono> raw;
    for (const FlagMono& m : homog_monomials(deg, j, n)) xor_into(raw, m);
    return normal_form(n, raw);
}

std::vector<FlagMono> staircase_basis(int n, int degree) {
    std::vector<FlagMono> out;
    FlagMono cur(n, 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == n) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        int cap = std::min(n - 1 - var, remaining);  // alpha_i <= n-i
        for (int e = 0; e <= cap; ++e) {
            cur[var] = e;
            rec(var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(0, degree);
    return out;
}

std::vector<long> coinvariant_dims(int n) {
    std::vector<long> dims;
    for (int d = 0; d <= n * (n - 1) / 2; ++d)
        dims.push_back(static_cast<long>(staircase_basis(n, d).size()));
    return dims;
}

// Sq2 as a GF(2) matrix from degree d to d+1 on the staircase bases.
static Gf2Matrix sq2_flag_matrix(int n, const std::vector<FlagMono>& src,
                                 const std::vector<FlagMono>& dst) {
    std::map<FlagMono, std::size_t> pos;
    for (std::size_t i = 0; i < dst.size(); ++i) pos[dst[i]] = i;
    Gf2Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        FlagClass img = sq2_flag(FlagClass{n, {src[c]}});
        for (const FlagMono& mono : img.monos) m.flip(pos.at(mono), c);
    }
    return m;
}

std::optional<FlagClass> solve_sq2(const FlagClass& target) {
    const int n = target.n;
    if (flag_is_zero(target)) return flag_zero(n);
    int d = flag_degree(target);
    if (d < 0) throw std::invalid_argument("solve_sq2: target must be homogeneous");
    if (d == 0) return std::nullopt;  // nothing squares to a constant

    std::vector<FlagMono> src = staircase_basis(n, d - 1);
    std::vector<FlagMono> dst = staircase_basis(n, d);
    Gf2Matrix m = sq2_flag_matrix(n, src, dst);
    std::map<FlagMono, std::size_t> pos;
    for (std::size_t i = 0; i < dst.size(); ++i) pos[dst[i]] = i;
    std::vector<bool> rhs(dst.size(), false);
    for (const FlagMono& mono : target.monos) rhs[pos.at(mono)] = true;
    auto sol = m.solve(rhs);
    if (!sol) return std::nullopt;
    FlagClass u = flag_zero(n);
    for (std::size_t i = 0; i < src.size(); ++i)
        if ((*sol)[i]) u.monos.insert(src[i]);
    return u;
}

FlagClass t_class(int n, int a) {
    if (a < 1 || a > n / 2) throw std::invalid_argument("t_class: need 1 <= a <= n/2");
    if (n % 2 == 0 && a == n / 2) {
        FlagMono m(n, 0);
        m[0] = n - 1;
        return normal_form(n, {m});
    }
    FlagClass h_top = complete_homog(2 * a, n - 2 * a, n);
    FlagClass h_next = complete_homog(2 * a - 1, n - 2 * a + 1, n);
    FlagClass target = flag_mul(h_top, h_top);
    auto u = solve_sq2(target);
    if (!u) throw std::logic_error("t_class: no primitive for the squared Euler class");
    FlagClass t = flag_add(flag_mul(h_top, h_next), *u);
    if (!flag_is_zero(sq2_flag(t)))
        throw std::logic_error("t_class: constructed class is not Sq2-closed");
    return t;
}

std::vector<long> e_flag_dims(int n) {
    const int top = n * (n - 1) / 2;
    std::vector<long> dims(top + 1, 0);
    std::vector<std::vector<FlagMono>> bases(top + 2);
    for (int d = 0; d <= top + 1; ++d) bases[d] = staircase_basis(n, d);
    long prev_rank = 0;
    for (int d = 0; d <= top; ++d) {
        Gf2Matrix m = sq2_flag_matrix(n, bases[d], bases[d + 1]);
        long ker = static_cast<long>(bases[d].size()) - static_cast<long>(m.rank());
        dims[d] = ker - prev_rank;
        prev_rank = static_cast<long>(m.rank());
    }
    return dims;
}

bool exterior_check(int n) {
    const int top = n * (n - 1) / 2;
    const int gens = n / 2;
    std::vector<FlagClass> ts;
    for (int a = 1; a <= gens; ++a) ts.push_back(t_class(n, a));

    // squares die in E
    for (const FlagClass& t : ts) {
        FlagClass sq = flag_mul(t, t);
        if (!flag_is_zero(sq) && !solve_sq2(sq).has_value()) return false;
    }

    // subset products, grouped by degree
    std::map<int, std::vector<FlagClass>> products;
    for (unsigned bits = 0; bits < (1u << gens); ++bits) {
        FlagClass p = flag_one(n);
        for (int i = 0; i < gens; ++i)
            if (bits & (1u << i)) p = flag_mul(p, ts[i]);
        if (!flag_is_zero(sq2_flag(p))) return false;
        if (flag_is_zero(p)) return false;  // must survive to span E
        products[flag_degree(p)].push_back(p);
    }

    std::vector<long> want = e_flag_dims(n);
    for (int d = 0; d <= top; ++d) {
        long claimed = products.count(d) ? static_cast<long>(products[d].size()) : 0;
        if (claimed != want[d]) return false;
        if (claimed == 0) continue;
        // independence modulo the image: rank(im + products) = rank(im) + #products
        std::vector<FlagMono> here = staircase_basis(n, d);
        std::map<FlagMono, std::size_t> pos;
        for (std::size_t i = 0; i < here.size(); ++i) pos[here[i]] = i;
        std::vector<std::vector<bool>> im_rows;
        if (d > 0) {
            for (const FlagMono& below : staircase_basis(n, d - 1)) {
                FlagClass img = sq2_flag(FlagClass{n, {below}});
                std::vector<bool> row(here.size(), false);
                for (const FlagMono& m : img.monos) row[pos.at(m)] = true;
                im_rows.push_back(std::move(row));
            }
        }
        std::size_t im_rank = gf2_rank_of(im_rows);
        for (const FlagClass& p : products[d]) {
            std::vector<bool> row(here.size(), false);
            for (const FlagMono& m : p.monos) row[pos.at(m)] = true;
            im_rows.push_back(std::move(row));
        }
        if (gf2_rank_of(im_rows) != im_rank + products[d].size()) return false;
    }
    return true;
}

}  // namespace mw
