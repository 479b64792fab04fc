#pragma once

#include <map>
#include <vector>

#include "typea/arith.hpp"

namespace typea {

// element of F_{p^s}: coefficients of 1, x, ..., x^{s-1} mod the defining polynomial
using fq_elt = std::vector<i64>;

struct fq_field {
    i64 p = 0, s = 0, q = 0;
    std::vector<i64> poly;  // monic defining polynomial, coefficients c_0..c_{s-1}
    std::vector<fq_elt> pow_table;  // g^0 .. g^{q-2}, g = class of x
    std::map<fq_elt, i64> log_table;

    static const fq_field& get(i64 p, i64 s);  // cached deterministic construction

    fq_elt zero() const { return fq_elt(s, 0); }
    fq_elt one() const;
    fq_elt gen() const;  // class of x, a generator of the unit group
    bool is_zero(const fq_elt& a) const;
    fq_elt add(const fq_elt& a, const fq_elt& b) const;
    fq_elt neg(const fq_elt& a) const;
    fq_elt mul(const fq_elt& a, const fq_elt& b) const;
    fq_elt pow(const fq_elt& a, i64 k) const;
    fq_elt inv(const fq_elt& a) const;
    fq_elt frobenius(const fq_elt& a) const;  // a^p
    i64 log(const fq_elt& a) const;           // discrete log base gen, a != 0

    // absolute trace to F_p, returned as an integer in [0, p)
    i64 trace(const fq_elt& a) const;
    // relative trace to the subfield F_{p^k}, k | s
    fq_elt rel_trace(const fq_elt& a, i64 k) const;
    bool in_subfield(const fq_elt& a, i64 k) const;

    // least exponent u > 1 with gcd(u, q-1) = 1, for alternate-generator tests
    i64 alt_generator_power() const;
};

}  // namespace typea
