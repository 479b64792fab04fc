#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "typea/arith.hpp"

namespace typea {

/* exact element of Q(zeta_n), stored in the power basis zeta^0..zeta^{phi(n)-1}
   after reduction mod the n-th cyclotomic polynomial */
struct cyclotomic {
    i64 n = 1;
    std::vector<mpq_class> c;

    cyclotomic() : c(1) {}
    explicit cyclotomic(i64 order);

    static cyclotomic zero() { return cyclotomic(); }
    static cyclotomic one() { return from_rational(1); }
    static cyclotomic from_rational(const mpq_class& r);
    static cyclotomic root_of_unity(i64 order, i64 exponent);

    bool is_zero() const;
    bool is_rational(mpq_class* out = nullptr) const;

    cyclotomic promoted(i64 m) const;
    cyclotomic galois(i64 k) const;
    cyclotomic conj() const;
    cyclotomic pow(i64 k) const;

    friend cyclotomic operator+(const cyclotomic& a, const cyclotomic& b);
    friend cyclotomic operator-(const cyclotomic& a, const cyclotomic& b);
    friend cyclotomic operator-(const cyclotomic& a);
    friend cyclotomic operator*(const cyclotomic& a, const cyclotomic& b);
    friend cyclotomic operator*(const cyclotomic& a, const mpq_class& r);
    cyclotomic divided_by(const mpq_class& r) const;

    friend bool operator==(const cyclotomic& a, const cyclotomic& b);
    friend bool operator!=(const cyclotomic& a, const cyclotomic& b) { return !(a == b); }

    /* sparse (exponent, coefficient) view of the reduced form, exponents ascending */
    std::vector<std::pair<i64, mpq_class>> sparse() const;

    /* symbolic text: 1, -1, i, -i, zeta_N^k, -zeta_N^k, rationals, else polynomial */
    std::string text() const;
};

const std::vector<mpz_class>& cyclotomic_polynomial(i64 n);

}  // namespace typea
