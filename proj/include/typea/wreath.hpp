#pragma once

#include <map>
#include <utility>
#include <vector>

#include "typea/abelian.hpp"
#include "typea/symchar.hpp"

namespace typea {

/* concrete permutation of {0..n-1}, p[i] = image of i */
using perm = std::vector<i64>;

perm perm_identity(i64 n);
perm perm_mul(const perm& u, const perm& v);  // u after v
perm perm_inverse(const perm& u);
partition perm_cycle_type(const perm& u);
std::vector<perm> all_perms(i64 n);

/* permutation of the component index set, p[k] = image slot of component k */
using index_perm = std::vector<i64>;

/* G = (prod_i S_{n_i}^{d_i}) x| A with abelian A permuting like components,
   plus an optional outer index permutation phi */
struct wreath_group {
    std::vector<std::pair<i64, i64>> blocks;  // (n_i, d_i)
    fin_ab_group a;
    std::vector<index_perm> gen_perms;  // action of each invariant-factor generator
    index_perm phi;

    wreath_group(std::vector<std::pair<i64, i64>> bl, fin_ab_group grp,
                 std::vector<index_perm> gp, index_perm outer = {});

    i64 comp_count() const { return (i64)degrees.size(); }
    i64 comp_degree(i64 k) const { return degrees[k]; }
    index_perm perm_of(const ab_elt& e) const;
    i64 base_order() const;  // |G°|

    std::vector<i64> degrees;  // n of each component, blocks flattened
};

struct wreath_elt {
    std::vector<perm> w;  // one permutation per component
    ab_elt a;
};

/* labels: one partition of n_k per component; an index permutation moves the
   label of slot k to slot p[k] */
std::vector<partition> act_on_labels(const index_perm& p, const std::vector<partition>& lam);

/* ordered product of the coordinates along each a-cycle, starting at the least
   index of the cycle; pairs (cycle leader, product), leaders ascending */
std::vector<std::pair<i64, perm>> pi_project(const wreath_group& w, const wreath_elt& g);

/* cycle types of pi_project, one per a-cycle in leader order */
std::vector<partition> pi_class(const wreath_group& w, const wreath_elt& g);

/* value at g of the unique extension of the irreducible labelled by lambdas
   that is a positive integer on the stabilizer of the label */
i64 canonical_extension_value(const wreath_group& w, const std::vector<partition>& lambdas,
                              const wreath_elt& g);

i64 label_dimension(const wreath_group& w, const std::vector<partition>& lambdas);

struct wreath_char {
    std::vector<partition> lambdas;  // lex-least representative of the A-orbit
    subgroup_data stab;              // A(lambda) inside A
    ab_char xi;                      // character of stab.group
    i64 degree;
};

/* complete list of irreducibles of G° x| A: orbit representatives paired with
   the characters of their stabilizers */
std::vector<wreath_char> irr_semidirect(const wreath_group& w);

/* class functions on the coset G°a live on classes of the a-fixed subgroup:
   one cycle type per a-cycle, cycles in leader order */
std::vector<i64> cycle_leaders(const wreath_group& w, const ab_elt& a);
std::vector<std::vector<partition>> fixed_subgroup_classes(const wreath_group& w, const ab_elt& a);

/* induction from the coset H°a of an a-stable product of Young subgroups
   (young[k] a partition of n_k); f is keyed by classes of (H°)^a: per a-cycle,
   one partition per Young part of the leader; missing keys read as zero */
std::map<std::vector<partition>, cyclotomic> twisted_induce(
    const wreath_group& w, const ab_elt& a, const std::vector<partition>& young,
    const std::map<std::vector<std::vector<partition>>, cyclotomic>& f);

/* explicit element-level model, |G| <= 2000 */
struct brute_wreath {
    wreath_group w;
    std::vector<wreath_elt> elts;
    std::vector<i64> cls_of;   // element index -> class index
    std::vector<i64> cls_rep;  // class index -> element index
    std::vector<i64> cls_size;

    explicit brute_wreath(const wreath_group& grp);

    i64 size() const { return (i64)elts.size(); }
    i64 n_classes() const { return (i64)cls_rep.size(); }
    wreath_elt mul(const wreath_elt& x, const wreath_elt& y) const;
    wreath_elt inv(const wreath_elt& x) const;
    i64 idx(const wreath_elt& x) const;

    std::map<std::pair<std::vector<perm>, ab_elt>, i64> index;
};

/* values on the brute classes of Ind_{G(chi)}^G (canonical extension ⊗ xi) */
std::vector<cyclotomic> induced_char_values(const brute_wreath& bg, const wreath_char& wc);

/* values on the brute classes of Ind_{G_lambda}^G of the inflation of xi */
std::vector<cyclotomic> pi_induced_values(const brute_wreath& bg, const wreath_char& wc);

/* eta (values per brute class) lies in Z Irr G iff its restriction to every
   G_lambda pairs integrally with every character of the stabilizer */
bool integrality_test(const brute_wreath& bg, const std::vector<cyclotomic>& eta);

}  // namespace typea
