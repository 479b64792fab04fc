#pragma once

#include <map>
#include <vector>

#include "typea/abelian.hpp"
#include "typea/root_datum.hpp"

namespace typea {

/* component group of the center, presented on the fundamental coweights */
struct center_data {
    fin_ab_group group;
    std::vector<ab_elt> coweight_images;  // one per global simple-root label
    ab_hom frobenius;

    std::vector<i64> ns;
    i64 d = 1;
    i64 p = 0;
};

/* requires the full base; the center of a proper Levi is read off through
   the quotient by levi_kernel */
center_data center_group(const root_datum& datum, const frobenius_data& frob);

/* subgroup generated by the coweight images over the complement of I */
subgroup_data levi_kernel(const center_data& c, const levi_label& I);

/* permutation of the affine diagram nodes attached to a central element;
   node 0 is the lowest root, node j the j-th simple root; only for the
   simply connected quasi-simple case with p prime to n */
std::vector<i64> affine_center_iso(const center_data& c, const ab_elt& z);

/* largest self-opposed subset of I, by iterating the intersection over
   the distinguished coset representatives; factors capped at n <= 10 */
levi_label self_opposed_closure(const root_datum& datum, const levi_label& I);

struct cuspidal_info {
    std::vector<ab_char> chars;            // no proper Levi kernel inside the kernel
    std::map<i64, levi_label> min_levi;    // subgroup order -> least minimal standard label
};

cuspidal_info cuspidal_data(const center_data& c, const root_datum& datum);

/* cokernel of F - 1 on the center component group */
fin_ab_group h1_center(const center_data& c);

}  // namespace typea
