#pragma once

#include <utility>
#include <vector>

#include "typea/arith.hpp"
#include "typea/intmat.hpp"

namespace typea {

/* subset of the simple roots, sorted 1-based global labels */
using levi_label = std::vector<i64>;

/* based root datum with all quasi-simple factors of type A; lattice elements
   are rows over a fixed ambient weight basis, X is spanned by x_basis rows */
struct root_datum {
    std::vector<i64> ns;  // factor i is type A_{ns[i]-1}
    i64 d = 1;            // index of X between weight and root lattice

    int_matrix x_basis;  // rows: basis of X in ambient weight coordinates
    int_matrix pairing;  // <x_i, y_j> of the stored bases

    std::vector<std::vector<i64>> simple_roots;    // stored X coordinates
    std::vector<std::vector<i64>> simple_coroots;  // stored Y coordinates
    std::vector<i64> labels;                       // global label of each listed root

    i64 rank() const { return x_basis.rows; }
};

struct frobenius_data {
    i64 q = 0, p = 0;
    int s = 0;  // q = p^s
    std::vector<bool> twisted;
    std::vector<i64> factor_perm;  // image slot of each factor
    int_matrix phi0;               // on stored X coordinates, column convention
};

/* datum and Frobenius of SL_n / mu_d, twisted meaning the unitary form */
std::pair<root_datum, frobenius_data> build_group(i64 n, i64 d, i64 q, bool twisted);

/* same lattices, roots restricted to the parabolic subsystem based at I */
root_datum levi_subdatum(const root_datum& datum, const levi_label& I);

/* (det phi0 on X, det phi0 on the span of the listed roots) */
std::pair<i64, i64> frobenius_sign(const root_datum& datum, const frobenius_data& frob);

/* stored coordinates of an ambient weight vector, throws when outside X */
std::vector<i64> x_coords(const root_datum& datum, const std::vector<i64>& ambient);

}  // namespace typea
