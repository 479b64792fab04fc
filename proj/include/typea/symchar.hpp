#pragma once

#include <string>
#include <utility>
#include <vector>

#include "typea/arith.hpp"

namespace typea {

/* partition of n, parts weakly decreasing and positive */
struct partition {
    std::vector<i64> parts;

    partition() = default;
    explicit partition(std::vector<i64> ps);

    i64 size() const;
    i64 length() const { return (i64)parts.size(); }
    std::string text() const;

    friend bool operator==(const partition& a, const partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const partition& a, const partition& b) { return a.parts != b.parts; }
    friend bool operator<(const partition& a, const partition& b) { return a.parts < b.parts; }
};

partition dual_partition(const partition& lam);

/* b(lam) = sum_j (j-1) lam_j */
i64 b_invariant(const partition& lam);

/* all partitions of n, first part descending */
std::vector<partition> all_partitions(i64 n);

/* centralizer order z_mu = prod_j j^{m_j} m_j! of a class of cycle type mu in S_n */
i64 centralizer_order(const partition& mu);
i64 class_size(const partition& mu);

/* irreducible character of S_n labelled by lam at the class of cycle type mu */
i64 char_value(const partition& lam, const partition& mu);

/* decomposition of the permutation character on cosets of the Young subgroup of
   shape lam: pairs (mu, multiplicity), multiplicity of lam itself is 1 and every
   other constituent has strictly smaller b invariant */
std::vector<std::pair<partition, i64>> young_induction(const partition& lam);

}  // namespace typea
