#pragma once

#include <string>
#include <vector>

#include "typea/arith.hpp"
#include "typea/cyclotomic.hpp"
#include "typea/intmat.hpp"

namespace typea {

// element of a finite abelian group, residues per invariant factor
using ab_elt = std::vector<i64>;

struct fin_ab_group {
    std::vector<i64> factors;  // m1 | m2 | ... | mk, each >= 2

    fin_ab_group() = default;
    explicit fin_ab_group(std::vector<i64> fs);
    static fin_ab_group trivial() { return fin_ab_group(); }
    static fin_ab_group cyclic(i64 m);

    size_t rank() const { return factors.size(); }
    i64 order() const;
    i64 exponent() const { return factors.empty() ? 1 : factors.back(); }
    bool is_trivial() const { return factors.empty(); }

    ab_elt zero() const { return ab_elt(factors.size(), 0); }
    bool is_valid(const ab_elt& e) const;
    ab_elt reduce(ab_elt e) const;
    ab_elt add(const ab_elt& a, const ab_elt& b) const;
    ab_elt neg(const ab_elt& a) const;
    ab_elt scale(i64 k, const ab_elt& a) const;
    bool is_zero_elt(const ab_elt& a) const;
    i64 element_order(const ab_elt& a) const;
    std::vector<ab_elt> elements() const;  // full enumeration, guarded

    bool operator==(const fin_ab_group& o) const { return factors == o.factors; }
    bool operator!=(const fin_ab_group& o) const { return factors != o.factors; }
    std::string text() const;
};

struct ab_hom {
    fin_ab_group src, dst;
    int_matrix mat;  // dst.rank() x src.rank(), column j = image of generator j

    ab_hom(fin_ab_group s, fin_ab_group d, int_matrix m);
    static ab_hom identity(const fin_ab_group& g);
    static ab_hom scalar(const fin_ab_group& g, i64 k);
    static ab_hom from_images(const fin_ab_group& s, const fin_ab_group& d,
                              const std::vector<ab_elt>& images);

    ab_elt apply(const ab_elt& e) const;
    ab_hom compose(const ab_hom& inner) const;  // (*this) after inner
    ab_hom minus_identity() const;              // endomorphisms only
};

struct subgroup_data {
    fin_ab_group group;        // abstract invariant-factor form
    std::vector<ab_elt> gens;  // images in the ambient group, one per factor
};

subgroup_data subgroup_generated(const fin_ab_group& g, const std::vector<ab_elt>& elts);

/* coordinates in sub.group of an ambient element lying in the subgroup */
ab_elt subgroup_coords(const fin_ab_group& g, const subgroup_data& sub, const ab_elt& e);

struct hom_kernel_cokernel {
    fin_ab_group kernel;
    ab_hom embed;  // kernel -> h.src
    fin_ab_group cokernel;
    ab_hom project;  // h.dst -> cokernel
};

hom_kernel_cokernel hom_invariants(const ab_hom& h);

// kernel = fixed points of phi, cokernel = H^1(phi, G), both via phi - 1
hom_kernel_cokernel endo_h1(const ab_hom& phi);

struct ab_char {
    fin_ab_group group;
    std::vector<i64> c;  // exponent tuple, c_i mod m_i

    ab_char(fin_ab_group g, std::vector<i64> cc);
    static ab_char trivial_char(const fin_ab_group& g);

    cyclotomic eval(const ab_elt& e) const;
    bool in_kernel(const ab_elt& e) const;
    bool is_trivial() const;
    i64 order() const;
    ab_char mul(const ab_char& o) const;
    ab_char inverse() const;
    ab_char power(i64 k) const;

    bool operator==(const ab_char& o) const { return group == o.group && c == o.c; }
    bool operator<(const ab_char& o) const { return c < o.c; }
};

std::vector<ab_char> all_chars(const fin_ab_group& g);
cyclotomic dual_pairing(const ab_char& chi, const ab_elt& e);

}  // namespace typea
