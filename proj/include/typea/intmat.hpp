#pragma once

#include <gmpxx.h>

#include <vector>

namespace typea {

struct int_matrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> e;

    int_matrix() = default;
    int_matrix(int r, int c) : rows(r), cols(c), e((size_t)r * c) {}

    mpz_class& at(int r, int c) { return e[(size_t)r * cols + c]; }
    const mpz_class& at(int r, int c) const { return e[(size_t)r * cols + c]; }

    static int_matrix identity(int k);
    int_matrix mul(const int_matrix& o) const;
    int_matrix transpose() const;

    friend bool operator==(const int_matrix& a, const int_matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

/* u*m*v = s, s diagonal with d1 | d2 | ... >= 0; u_inv, v_inv are the exact inverses */
struct snf_result {
    int_matrix s, u, v, u_inv, v_inv;
};

snf_result smith_normal_form(const int_matrix& m);

mpz_class determinant(const int_matrix& m);

}  // namespace typea
