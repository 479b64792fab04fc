#pragma once

#include <map>
#include <vector>

#include "typea/abelian.hpp"
#include "typea/arith.hpp"
#include "typea/cyclotomic.hpp"

namespace typea {

/* the dual group PGL_n over F_q, with the twisted (unitary) Frobenius flag */
struct dual_group {
    i64 n = 0, q = 0, p = 0;
    int s = 0;
    bool twisted = false;
    i64 eps() const { return twisted ? -1 : 1; }
};

dual_group dual_group_of(i64 n, i64 q, bool twisted);

/* rational semisimple class, stored by an eps-q stable eigenvalue exponent
   multiset that is least among its translates by (q - eps)-torsion shifts */
struct ss_class {
    std::vector<qz_elt> lift;          // sorted, size n
    std::vector<qz_elt> geometric_id;  // lex-least translate over all shifts
    i64 alpha = 0;                     // coordinate in H1(F*, A_s)
};

struct orbit_info {
    qz_elt rep;  // least element of the orbit
    i64 size = 1;
    i64 mult = 1;
};

struct class_invariants {
    i64 a_order = 1;  // A_s is generated by 1/a_order inside (1/n)Z/Z
    fin_ab_group a_s;
    ab_hom frob_on_a;  // multiplication by eps*q
    fin_ab_group h1;
    std::map<qz_elt, i64> multiplicities;
    std::vector<orbit_info> orbits;  // eps-q orbits of distinct eigenvalues
    std::vector<i64> w_fixed_type;   // symmetric-group block per orbit, descending
};

std::vector<ss_class> enumerate_rational_classes(i64 n, i64 q, bool twisted);

class_invariants invariants_of(const dual_group& g, const ss_class& c);

/* a is passed as the translation itself and must stabilize the lift */
bool cuspidal_test(const dual_group& g, const ss_class& c, const qz_elt& a);

struct levi_block {
    i64 size = 0;       // block size, always ord(a); repeated per unit of multiplicity
    i64 orbit_len = 1;  // length of the F*-orbit on these blocks
    bool twisted = false;

    friend bool operator==(const levi_block& x, const levi_block& y) {
        return x.size == y.size && x.orbit_len == y.orbit_len && x.twisted == y.twisted;
    }
};

std::vector<levi_block> l_sa(const dual_group& g, const ss_class& c, const qz_elt& a);

/* value at z = i(d) of the central character of any series member over this
   class; z must lie in the fixed center of SL_n (or SU_n) */
cyclotomic central_character(const dual_group& g, const ss_class& c, const qz_elt& z);

}  // namespace typea
