#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace typea {

using i64 = long;

inline i64 gcd_i(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm_i(i64 a, i64 b) { return std::lcm(a, b); }

inline i64 mod_i(i64 a, i64 m) {
    if (m <= 0) throw std::invalid_argument("mod_i: modulus must be positive");
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 pow_i(i64 b, i64 e) {
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline i64 pow_mod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b = mod_i(b, m);
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/* q = p^s with p prime, s >= 1; returns false if q is not a prime power */
inline bool prime_power_decompose(i64 q, i64& p, int& s) {
    if (q < 2) return false;
    for (i64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            i64 m = q;
            int k = 0;
            while (m % d == 0) { m /= d; ++k; }
            if (m != 1) return false;
            p = d;
            s = k;
            return true;
        }
    }
    p = q;
    s = 1;
    return true;
}

inline i64 p_prime_part(i64 n, i64 p) {
    while (n % p == 0) n /= p;
    return n;
}

/* overflows past n = 20; callers stay far below that */
inline i64 factorial_i(i64 n) {
    i64 r = 1;
    for (i64 k = 2; k <= n; ++k) r *= k;
    return r;
}

inline std::vector<i64> divisors_of(i64 n) {
    std::vector<i64> lo, hi;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

/* order of a in (Z/m)^x; requires gcd(a,m) = 1 */
inline i64 multiplicative_order(i64 a, i64 m) {
    if (m == 1) return 1;
    a = mod_i(a, m);
    if (gcd_i(a, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
    i64 x = a % m, k = 1;
    while (x != 1 % m) {
        x = (__int128)x * a % m;
        ++k;
        if (k > m) throw std::logic_error("multiplicative_order: runaway");
    }
    return k;
}

inline i64 euler_phi(i64 n) {
    i64 r = n;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r -= r / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

/* reduced fraction a/m in Q/Z, m >= 1, 0 <= a < m */
struct qz_elt {
    i64 num = 0, den = 1;

    qz_elt() = default;
    qz_elt(i64 a, i64 m) {
        if (m <= 0) throw std::invalid_argument("qz_elt: denominator must be positive");
        a = mod_i(a, m);
        i64 g = gcd_i(a == 0 ? m : a, m);
        num = a / g;
        den = m / g;
    }

    bool is_zero() const { return num == 0; }
    i64 order() const { return den; }

    friend qz_elt operator+(const qz_elt& x, const qz_elt& y) {
        i64 d = lcm_i(x.den, y.den);
        return qz_elt(x.num * (d / x.den) + y.num * (d / y.den), d);
    }
    friend qz_elt operator-(const qz_elt& x, const qz_elt& y) {
        i64 d = lcm_i(x.den, y.den);
        return qz_elt(x.num * (d / x.den) - y.num * (d / y.den), d);
    }
    qz_elt scaled(i64 k) const { return qz_elt(mod_i((__int128)k % den * num % den, den), den); }
    friend bool operator==(const qz_elt& x, const qz_elt& y) { return x.num == y.num && x.den == y.den; }
    friend bool operator<(const qz_elt& x, const qz_elt& y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
};

}  // namespace typea
