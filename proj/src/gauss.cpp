#include "typea/gauss.hpp"

#include <stdexcept>

namespace typea {

cyclotomic gauss_sum(const fq_field& f, i64 m) { return gauss_sum_gen(f, m, 1); }

cyclotomic gauss_sum_gen(const fq_field& f, i64 m, i64 u) {
    if (gcd_i(u, f.q - 1) != 1) throw std::invalid_argument("generator power not coprime");
    i64 n = f.p * (f.q - 1);
    m = mod_i(m, f.q - 1);
    cyclotomic acc = cyclotomic::zero();
    for (i64 t = 0; t < f.q - 1; ++t) {
        i64 tr = f.trace(f.pow_table[mod_i(t * u, f.q - 1)]);
        // kappa^m(g_u^t) zeta_p^tr with g_u = g^u
        i64 e = mod_i(f.p * mod_i(m * t, f.q - 1) + (f.q - 1) * tr, n);
        acc = acc + cyclotomic::root_of_unity(n, e);
    }
    return acc;
}

cyclotomic sqrt_p(i64 p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("sqrt_p needs an odd prime");
    const fq_field& f = fq_field::get(p, 1);
    cyclotomic g = gauss_sum(f, (p - 1) / 2);
    if (p % 4 == 1) return g;
    return cyclotomic::root_of_unity(4, 3) * g;  // i^{-1} G_1(L_1)
}

cyclotomic p_half_power(i64 p, i64 k) {
    if (k < 0) throw std::invalid_argument("negative half power");
    mpz_class whole = 1;
    for (i64 i = 0; i < k / 2; ++i) whole *= p;
    cyclotomic r = cyclotomic::from_rational(mpq_class(whole));
    if (k % 2 == 1) r = r * sqrt_p(p);
    return r;
}

cyclotomic lambda_const(i64 p, i64 s) {
    if (p == 2) throw std::invalid_argument("lambda undefined for p = 2");
    const fq_field& f = fq_field::get(p, s);
    cyclotomic g = gauss_sum(f, (f.q - 1) / 2);
    // divide by p^{s/2}
    mpz_class whole = 1;
    for (i64 i = 0; i < s / 2; ++i) whole *= p;
    cyclotomic r = g.divided_by(mpq_class(whole));
    if (s % 2 == 1) r = r * sqrt_p(p).divided_by(mpq_class((long)p));
    return r;
}

cyclotomic dlm_value(i64 p, i64 eta_exp, i64 half_exp, const std::vector<gauss_orbit>& orbits,
                     bool alt_generator) {
    cyclotomic acc = cyclotomic::from_rational(eta_exp % 2 == 0 ? 1 : -1);
    for (const auto& o : orbits) {
        const fq_field& f = fq_field::get(p, o.r);
        i64 u = alt_generator ? f.alt_generator_power() : 1;
        acc = acc * gauss_sum_gen(f, o.exponent, u);
    }
    mpz_class whole = 1;
    for (i64 i = 0; i < half_exp / 2; ++i) whole *= p;
    acc = acc.divided_by(mpq_class(whole));
    if (half_exp % 2 == 1) {
        if (p == 2) throw std::invalid_argument("half-integral power of 2 not representable");
        acc = acc * sqrt_p(p).divided_by(mpq_class((long)p));
    }
    return acc;
}

cyclotomic group_constant_core(i64 n, i64 d, i64 q, bool twisted, i64 c, bool alt_generator) {
    i64 p;
    int s;
    if (!prime_power_decompose(q, p, s)) throw std::invalid_argument("q not a prime power");
    if (n < 2 || d < 1 || n % d != 0) throw std::invalid_argument("bad n, d");
    i64 eps = twisted ? -1 : 1;
    i64 m = p_prime_part(n / d, p);
    c = mod_i(c, m);
    // F acts on the center Z/m by eps*q; zeta must be F-stable
    if (mod_i(c * (eps * q - 1), m) != 0)
        throw std::invalid_argument("character is not F-stable");
    // lift to a weight: J = d*k with k = c mod m and k = 0 mod the p-part of n/d
    i64 ppart = (n / d) / m;
    i64 k = -1;
    for (i64 t = 0; t < n / d; ++t)
        if (t % m == c && t % ppart == 0) {
            k = t;
            break;
        }
    if (k < 0) throw std::logic_error("no weight lift found");
    i64 bigj = d * k;  // zeta-dot = varpi_J, coefficient of alpha_i is min(i,J) - iJ/n

    std::vector<gauss_orbit> orbits;
    auto coeff_num = [&](i64 i) {  // n * <varpi_J, varpi_i^vee> = n*min(i,J) - i*J
        return n * std::min(i, bigj) - i * bigj;
    };
    if (!twisted) {
        for (i64 i = 1; i <= n - 1; ++i) {
            i64 num = (q - 1) * coeff_num(i);
            if (num % n != 0) throw std::logic_error("non-integral gauss exponent");
            orbits.push_back({s, num / n});
        }
    } else {
        for (i64 i = 1; 2 * i < n; ++i) {
            // orbit {alpha_i, alpha_{n-i}} of size 2
            i64 num = (q * q - 1) * coeff_num(i);
            if (num % n != 0) throw std::logic_error("non-integral gauss exponent");
            orbits.push_back({2 * s, num / n});
        }
        if (n % 2 == 0) {
            i64 i = n / 2;
            i64 num = (q - 1) * coeff_num(i);
            if (num % n != 0) throw std::logic_error("non-integral gauss exponent");
            orbits.push_back({s, num / n});
        }
    }
    return dlm_value(p, n - 1, s * (n - 1), orbits, alt_generator);
}

cyclotomic group_constant(i64 n, i64 d, i64 q, bool twisted, const ab_char& zeta) {
    i64 p;
    int s;
    if (!prime_power_decompose(q, p, s)) throw std::invalid_argument("q not a prime power");
    i64 eps = twisted ? -1 : 1;
    i64 m = p_prime_part(n / d, p);
    i64 m0 = gcd_i(m, q - eps);
    fin_ab_group h1 = fin_ab_group::cyclic(m0);
    if (zeta.group != h1) throw std::invalid_argument("character lives on the wrong group");
    i64 c0 = zeta.c.empty() ? 0 : zeta.c[0];
    return group_constant_core(n, d, q, twisted, (m / m0) * c0);
}

cyclotomic sln_constant_closed(i64 n, i64 q, bool twisted) {
    i64 p;
    int s;
    if (!prime_power_decompose(q, p, s)) throw std::invalid_argument("q not a prime power");
    i64 eps = twisted ? -1 : 1;
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if ((q - eps) % n != 0)
        throw std::invalid_argument("no F-stable cuspidal character: n does not divide q - eps");
    if (n % 2 == 1) return cyclotomic::one();
    i64 e_num = (q - eps) * (n - 2);
    if (e_num % 8 != 0) throw std::logic_error("closed-form exponent not integral");
    i64 e = (e_num / 8) % 2;
    cyclotomic r = -lambda_const(p, s);
    if (e) r = -r;
    return r;
}

}  // namespace typea
