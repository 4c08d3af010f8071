#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mw {

// Exponent vector of a monomial in x_1..x_n (size n, entry i-1 = power of x_i).
using FlagMono = std::vector<int>;

// Mod-2 class in the coinvariant algebra Z/2[x_1..x_n]/(symmetric functions),
// stored on the staircase basis alpha_i <= n-i.
struct FlagClass {
    int n = 0;
    std::set<FlagMono> monos;  // coefficient-1 monomials in normal form
};

FlagClass flag_zero(int n);
FlagClass flag_one(int n);
FlagClass flag_var(int n, int i);  // x_i

// Reduce arbitrary monomials with the triangular rewriting system
// h_{n-i+1}(x_1..x_i) = 0, eliminating the highest power of x_i.
FlagClass normal_form(int n, const std::set<FlagMono>& raw);

FlagClass flag_add(const FlagClass& a, const FlagClass& b);  // xor of supports
FlagClass flag_mul(const FlagClass& a, const FlagClass& b);
bool flag_is_zero(const FlagClass& a);
// Homogeneous degree, -1 for zero or mixed.
int flag_degree(const FlagClass& a);
std::string flag_str(const FlagClass& a);

// Derivation with Sq2(x_i) = x_i^2, then normal form.
FlagClass sq2_flag(const FlagClass& a);

// Complete homogeneous polynomial h_deg(x_1..x_j), reduced.
FlagClass complete_homog(int deg, int j, int n);

// Any u with Sq2(u) = target (GF(2) solve on the staircase basis), or absent.
std::optional<FlagClass> solve_sq2(const FlagClass& target);

// T_a = h_{2a}(x_1..x_{n-2a}) h_{2a-1}(x_1..x_{n-2a+1}) + u with
// Sq2(u) = h_{2a}(x_1..x_{n-2a})^2; T_{n/2} = x_1^{n-1} for even n.
// Always Sq2-closed, of degree 4a-1 (resp. n-1).
FlagClass t_class(int n, int a);

// Staircase monomials of one degree, deterministic order.
std::vector<FlagMono> staircase_basis(int n, int degree);

// Graded dimensions of the coinvariant algebra (staircase counts).
std::vector<long> coinvariant_dims(int n);

// dim Ker(Sq2)_d / Im(Sq2)_d for d = 0..n(n-1)/2.
std::vector<long> e_flag_dims(int n);

// Products of distinct T_a are independent Sq2-cocycles exhausting the
// E-dimensions, and each T_a^2 dies in E.
bool exterior_check(int n);

}  // namespace mw
