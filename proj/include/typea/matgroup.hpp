#pragma once

#include <map>
#include <string>
#include <vector>

#include "typea/arith.hpp"
#include "typea/fqfield.hpp"

namespace typea {

// square matrix over F_{p^s}, row major
using fq_mat = std::vector<fq_elt>;

/* small matrix group held as an explicit element list: closure enumeration
   from the generators, then conjugacy classes by orbit walk under generator
   conjugation; element 0 is the identity and each class rep is the least
   element index in its class */
struct mat_group {
    const fq_field* field = nullptr;
    i64 dim = 0;
    bool projective = false;  // elements normalized so the first nonzero entry is 1
    std::string name;
    std::vector<int> gens;
    std::vector<fq_mat> elements;
    std::map<std::vector<i64>, int> index;
    std::vector<int> inv_of;
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_rep;

    i64 order() const { return (i64)elements.size(); }
    i64 class_count() const { return (i64)classes.size(); }

    std::vector<i64> key_of(const fq_mat& m) const;
    fq_mat canonical(fq_mat m) const;
    fq_mat multiply(const fq_mat& a, const fq_mat& b) const;
    fq_mat inverse(const fq_mat& a) const;
    int lookup(const fq_mat& m) const;  // -1 if absent
    int mul(int a, int b) const;
    int power(int a, i64 k) const;  // k >= 0
    i64 element_order(int a) const;
    i64 exponent() const;  // lcm of class rep orders

    const fq_elt& entry(int e, i64 i, i64 j) const;
    bool is_identity(int e) const;
    bool is_diagonal(int e) const;
    bool is_unitriangular(int e) const;
    bool is_unipotent(int e) const;
    bool is_regular_unipotent(int e) const;
};

constexpr i64 mat_group_bound = 100000;

fq_mat identity_mat(const fq_field& f, i64 dim);
fq_elt mat_det(const fq_field& f, i64 dim, const fq_mat& m);
/* \bar{g}^T J g = J for the antidiagonal form J, bar = q-power Frobenius
   of the quadratic subfield tower F_{q^2}/F_q with q = p^sub_s */
bool unitary_wrt_antidiag(const fq_field& f, i64 dim, const fq_mat& m, i64 sub_s);

/* closure enumeration and conjugacy classes; rejects order > mat_group_bound */
mat_group matrix_group(const fq_field& f, i64 dim, bool projective,
                       const std::string& name, const std::vector<fq_mat>& gen_mats);

mat_group sl_group(i64 n, i64 q);
/* SU_n(q) inside GL_n(q^2) as fixed points of conjugate-transpose-inverse
   with the antidiagonal hermitian form */
mat_group su_group(i64 n, i64 q);
mat_group pgl_group(i64 n, i64 q);
mat_group symmetric_group(i64 n);   // permutation matrices over F_2
mat_group alternating_group(i64 n);
mat_group trivial_group();

}  // namespace typea
