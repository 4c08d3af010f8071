#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mw {

// Exact integer arithmetic everywhere; LR coefficients and Jacobi-Trudi
// determinants over random series coefficients outgrow fixed width.
using Int = boost::multiprecision::cpp_int;

inline bool is_odd(const Int& x) { return boost::multiprecision::bit_test(abs(x), 0); }
inline bool is_odd(long x) { return (x % 2 + 2) % 2 == 1; }

// Residue in {0,1}.
inline Int mod2(const Int& x) { return is_odd(x) ? Int(1) : Int(0); }

// Coefficient ring of cycles and Schur combinations.
enum class Ring { integral, mod2 };

inline Int ring_normalize(Ring ring, const Int& x) {
    return ring == Ring::mod2 ? mod2(x) : x;
}

}  // namespace mw
