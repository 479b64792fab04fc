#pragma once

#include <vector>

#include "typea/abelian.hpp"
#include "typea/cyclotomic.hpp"
#include "typea/fqfield.hpp"

namespace typea {

// G_s(kappa^m) = sum over x in F_{p^s}^* of kappa^m(x) chi_s(x), exact in Z[zeta_{p(q-1)}];
// kappa sends the canonical generator to zeta_{q-1}, chi_s = zeta_p^{trace}
cyclotomic gauss_sum(const fq_field& f, i64 m);

// same sum with kappa defined via the alternate generator g^u, gcd(u, q-1) = 1
cyclotomic gauss_sum_gen(const fq_field& f, i64 m, i64 u);

// exact square root of p (p odd): G_1(L_1) if p = 1 mod 4, i^{-1} G_1(L_1) if p = 3 mod 4
cyclotomic sqrt_p(i64 p);

// p^{k/2} for k >= 0, using sqrt_p when k is odd (rejects p = 2 with odd k)
cyclotomic p_half_power(i64 p, i64 k);

// lambda_s = p^{-s/2} G_s(L_s), L_s the quadratic character; rejects p = 2
cyclotomic lambda_const(i64 p, i64 s);

// one factor of the group-constant product: Gauss sum over F_{p^r} at kappa^exponent
struct gauss_orbit {
    i64 r;
    i64 exponent;
};

// (-1)^eta_exp * p^{-half_exp/2} * prod G_{r}(kappa^e); alt_generator rebuilds each
// kappa from the field's alternate generator (the value must not change)
cyclotomic dlm_value(i64 p, i64 eta_exp, i64 half_exp, const std::vector<gauss_orbit>& orbits,
                     bool alt_generator = false);

// G(G, zeta) for G = SL_n/mu_d over F_q (twisted: SU), zeta given by its exponent
// c on the center Z/m, m = (n/d)_{p'}; rejects characters that are not F-stable
cyclotomic group_constant_core(i64 n, i64 d, i64 q, bool twisted, i64 c,
                               bool alt_generator = false);

// same with zeta as a character of H^1(F, Z) = Z/gcd(m, q-eps)
cyclotomic group_constant(i64 n, i64 d, i64 q, bool twisted, const ab_char& zeta);

// closed form for cuspidal F-stable zeta on SL_n: requires n | q - eps
cyclotomic sln_constant_closed(i64 n, i64 q, bool twisted);

}  // namespace typea
