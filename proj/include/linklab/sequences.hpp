#pragma once

#include "linklab/common.hpp"

namespace linklab {

/// alpha'_m: 1, 2, 5, 10, 21, 42, ... Doubling at even indices, doubling
/// plus one at odd indices; the odd entries satisfy alpha'_{2m-1} = (4^m-1)/3.
inline BigInt alpha_prime(int m) {
    if (m < 1) throw InvalidArgument("alpha_prime: index must be >= 1");
    BigInt a = 1;
    for (int i = 2; i <= m; ++i) {
        a *= 2;
        if (i % 2 == 1) a += 1;
    }
    return a;
}

/// Closed form for odd indices: alpha'_{2m-1} = (4^m - 1) / 3.
inline BigInt alpha_prime_closed_form_odd(int m) {
    if (m < 1) throw InvalidArgument("alpha_prime_closed_form_odd: index must be >= 1");
    BigInt four_m = 1;
    for (int i = 0; i < m; ++i) four_m *= 4;
    return (four_m - 1) / 3;
}

/// Smallest k with 2^k >= n.
inline int ceil_log2(int n) {
    if (n < 1) throw InvalidArgument("ceil_log2: n must be >= 1");
    int k = 0;
    BigInt pow = 1;
    while (pow < n) {
        pow *= 2;
        ++k;
    }
    return k;
}

inline bool zeta_small_n(int n) { return n < 5; }

/// zeta_n = (n+1) * floor((n+1)/2) * ceil((n+1)/2) ^ (ceil(log2 n) - 2),
/// the lower bound on the vertex count of the cycles entering the splice
/// reduction. Intended for n >= 5; n in {2,3,4} is accepted but flagged by
/// zeta_small_n (the bounds there are inferior to the specialized ones). The
/// n = 2 exponent is -1, so the exact value 3/2 is rounded up.
inline BigInt zeta(int n) {
    if (n < 2) throw InvalidArgument("zeta: n must be >= 2");
    const BigInt fl = (n + 1) / 2;
    const BigInt cl = (n + 2) / 2;  // ceil((n+1)/2)
    const int expo = ceil_log2(n) - 2;
    BigInt base = BigInt(n + 1) * fl;
    if (expo >= 0) {
        for (int i = 0; i < expo; ++i) base *= cl;
        return base;
    }
    BigInt den = 1;
    for (int i = 0; i < -expo; ++i) den *= cl;
    return (base + den - 1) / den;  // ceiling
}

/// eta_n = alpha'_n * (zeta_n + 3).
inline BigInt eta(int n) { return alpha_prime(n) * (zeta(n) + 3); }

/// The chained growth inequality behind the splice recursion: after one
/// pairing round the surviving cycles still meet the bound for ceil(n/2).
///   2*floor*ceil^(e-2) + 2 >= (n+1)*floor*ceil^(e-3)
///                          >= (n+1)*floor*ceil^(e'-2),  e' = ceil(log2(n/2))
/// with e = ceil(log2 n). Exact integers throughout; n >= 5 keeps every
/// exponent nonnegative.
inline bool check_zeta_growth(int n) {
    if (n < 5) throw InvalidArgument("check_zeta_growth: n must be >= 5");
    const BigInt fl = (n + 1) / 2;
    const BigInt cl = (n + 2) / 2;
    const int e = ceil_log2(n);
    const auto pow_cl = [&](int k) {
        BigInt p = 1;
        for (int i = 0; i < k; ++i) p *= cl;
        return p;
    };
    const BigInt lhs = 2 * fl * pow_cl(e - 2) + 2;
    const BigInt mid = BigInt(n + 1) * fl * pow_cl(e - 3);
    // ceil(log2(n/2)) = ceil(log2 n) - 1 for every integer n >= 2.
    const int e_half = e - 1;
    const BigInt rhs = BigInt(n + 1) * fl * pow_cl(e_half - 2 >= 0 ? e_half - 2 : 0);
    return lhs >= mid && mid >= rhs;
}

}  // namespace linklab
