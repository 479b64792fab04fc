#include "typea/symchar.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace typea {

partition::partition(std::vector<i64> ps) {
    for (i64 p : ps)
        if (p < 1) throw std::invalid_argument("partition: parts must be positive");
    std::sort(ps.begin(), ps.end(), std::greater<i64>());
    parts = std::move(ps);
}

i64 partition::size() const {
    i64 n = 0;
    for (i64 p : parts) n += p;
    return n;
}

std::string partition::text() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

partition dual_partition(const partition& lam) {
    std::vector<i64> d;
    if (!lam.parts.empty()) {
        for (i64 j = 1; j <= lam.parts[0]; ++j) {
            i64 c = 0;
            for (i64 p : lam.parts) c += p >= j ? 1 : 0;
            d.push_back(c);
        }
    }
    return partition(d);
}

i64 b_invariant(const partition& lam) {
    i64 b = 0;
    for (size_t j = 0; j < lam.parts.size(); ++j) b += (i64)j * lam.parts[j];
    return b;
}

namespace {

void gen_partitions(i64 n, i64 max_part, std::vector<i64>& cur, std::vector<partition>& out) {
    if (n == 0) {
        out.push_back(partition(cur));
        return;
    }
    for (i64 p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<partition> all_partitions(i64 n) {
    if (n < 0) throw std::invalid_argument("all_partitions: negative size");
    std::vector<partition> out;
    std::vector<i64> cur;
    gen_partitions(n, std::max<i64>(n, 1), cur, out);
    return out;
}

i64 centralizer_order(const partition& mu) {
    i64 z = 1;
    size_t i = 0;
    while (i < mu.parts.size()) {
        size_t j = i;
        while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
        z *= pow_i(mu.parts[i], (i64)(j - i)) * factorial_i((i64)(j - i));
        i = j;
    }
    return z;
}

i64 class_size(const partition& mu) { return factorial_i(mu.size()) / centralizer_order(mu); }

/* Murnaghan-Nakayama, always stripping a hook of length mu_1 (the largest part).
   Rows are encoded as the decreasing beta set b_j = lam_j + L - 1 - j; removing a
   rim hook of length k means lowering one b_j by k onto a free value, and the leg
   height is the number of entries jumped over. */
i64 char_value(const partition& lam, const partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("char_value: partition sizes differ");
    if (lam.size() == 0) return 1;

    static std::map<std::pair<std::vector<i64>, std::vector<i64>>, i64> memo;
    static std::mutex memo_mtx;
    const std::pair<std::vector<i64>, std::vector<i64>> key{lam.parts, mu.parts};
    {
        std::lock_guard<std::mutex> lk(memo_mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const i64 k = mu.parts[0];
    const partition rest(std::vector<i64>(mu.parts.begin() + 1, mu.parts.end()));
    const i64 len = lam.length();
    std::vector<i64> beta(len);
    for (i64 j = 0; j < len; ++j) beta[j] = lam.parts[j] + len - 1 - j;

    i64 total = 0;
    for (i64 j = 0; j < len; ++j) {
        i64 t = beta[j] - k;
        if (t < 0) continue;
        bool occupied = false;
        i64 height = 0;
        for (i64 l = 0; l < len; ++l) {
            if (l == j) continue;
            if (beta[l] == t) occupied = true;
            if (beta[l] > t && beta[l] < beta[j]) ++height;
        }
        if (occupied) continue;
        std::vector<i64> nb = beta;
        nb[j] = t;
        std::sort(nb.begin(), nb.end(), std::greater<i64>());
        std::vector<i64> nl;
        for (i64 l = 0; l < len; ++l) {
            i64 part = nb[l] - (len - 1 - l);
            if (part > 0) nl.push_back(part);
        }
        i64 sub = char_value(partition(nl), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lk(memo_mtx);
    memo.emplace(key, total);
    return total;
}

namespace {

/* cycle types of the Young subgroup of shape `parts`, weighted by 1/z per factor */
void accumulate_types(const std::vector<i64>& parts, size_t idx, std::vector<i64>& acc,
                      const mpq_class& w, std::map<std::vector<i64>, mpq_class>& out) {
    if (idx == parts.size()) {
        std::vector<i64> key = acc;
        std::sort(key.begin(), key.end(), std::greater<i64>());
        out[key] += w;
        return;
    }
    for (const partition& pi : all_partitions(parts[idx])) {
        size_t base = acc.size();
        acc.insert(acc.end(), pi.parts.begin(), pi.parts.end());
        accumulate_types(parts, idx + 1, acc, w / centralizer_order(pi), out);
        acc.resize(base);
    }
}

}  // namespace

std::vector<std::pair<partition, i64>> young_induction(const partition& lam) {
    std::map<std::vector<i64>, mpq_class> types;
    std::vector<i64> acc;
    accumulate_types(lam.parts, 0, acc, mpq_class(1), types);

    std::vector<std::pair<partition, i64>> out;
    for (const partition& mu : all_partitions(lam.size())) {
        mpq_class coeff = 0;
        for (const auto& [ct, w] : types) coeff += w * char_value(mu, partition(ct));
        if (coeff == 0) continue;
        if (coeff.get_den() != 1 || coeff < 0)
            throw std::logic_error("young_induction: bad multiplicity");
        out.emplace_back(mu, (i64)coeff.get_num().get_si());
    }
    return out;
}

}  // namespace typea
