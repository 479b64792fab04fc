#include "typea/dual_classes.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace typea {

namespace {

std::vector<qz_elt> translated(const std::vector<qz_elt>& e, const qz_elt& c) {
    std::vector<qz_elt> out;
    out.reserve(e.size());
    for (const qz_elt& x : e) out.push_back(x + c);
    std::sort(out.begin(), out.end());
    return out;
}

/* largest divisor a of n with lift + 1/a = lift */
i64 stabilizer_order(i64 n, const std::vector<qz_elt>& lift) {
    std::vector<i64> divs = divisors_of(n);
    for (auto it = divs.rbegin(); it != divs.rend(); ++it)
        if (translated(lift, qz_elt(1, *it)) == lift) return *it;
    return 1;
}

void check_stable(const dual_group& g, const std::vector<qz_elt>& lift) {
    std::vector<qz_elt> img;
    for (const qz_elt& x : lift) img.push_back(x.scaled(g.eps() * g.q));
    std::sort(img.begin(), img.end());
    if (img != lift) throw std::invalid_argument("ss_class: lift is not stable");
}

std::vector<orbit_info> frobenius_orbits(const dual_group& g, const std::vector<qz_elt>& lift) {
    std::map<qz_elt, i64> mult;
    for (const qz_elt& x : lift) ++mult[x];
    std::vector<orbit_info> orbits;
    std::set<qz_elt> seen;
    for (const auto& [e, m] : mult) {
        if (seen.count(e)) continue;
        orbit_info o;
        o.rep = e;
        o.mult = m;
        o.size = 0;
        qz_elt x = e;
        do {
            seen.insert(x);
            ++o.size;
            x = x.scaled(g.eps() * g.q);
        } while (!(x == e));
        orbits.push_back(o);
    }
    return orbits;
}

/* coordinate of an element of A_s = <1/a_order> */
i64 a_coordinate(const qz_elt& x, i64 a_order) {
    if (a_order % x.den != 0) throw std::logic_error("a_coordinate: not in the stabilizer");
    return mod_i(x.num * (a_order / x.den), a_order);
}

}  // namespace

dual_group dual_group_of(i64 n, i64 q, bool twisted) {
    if (n < 1) throw std::invalid_argument("dual_group_of: n must be positive");
    dual_group g;
    g.n = n;
    g.q = q;
    g.twisted = twisted;
    if (!prime_power_decompose(q, g.p, g.s))
        throw std::invalid_argument("dual_group_of: q not a prime power");
    return g;
}

std::vector<ss_class> enumerate_rational_classes(i64 n, i64 q, bool twisted) {
    dual_group g = dual_group_of(n, q, twisted);
    __int128 scale = 1;
    for (i64 k = 0; k < n; ++k) scale *= q;
    if (n > 12 || scale > 100000000) throw std::invalid_argument("enumerate_rational_classes: scale exceeded");
    i64 eq = g.eps() * q;

    // pool of eps-q orbits, one per least representative, grouped by size
    std::vector<std::pair<i64, qz_elt>> pool;  // (orbit size, least rep)
    for (i64 k = 1; k <= n; ++k) {
        i64 dk = pow_i(q, k) - (g.eps() == -1 && k % 2 == 1 ? -1 : 1);
        for (i64 a = 0; a < dk; ++a) {
            qz_elt e(a, dk);
            i64 size = 0;
            bool least = true;
            qz_elt x = e;
            do {
                ++size;
                x = x.scaled(eq);
                if (x < e) least = false;
            } while (!(x == e) && size <= k);
            if (size == k && least) pool.emplace_back(k, e);
        }
    }

    // multisets of orbits with total size n, orbit multiplicities allowed
    std::vector<ss_class> out;
    std::vector<std::pair<size_t, i64>> chosen;  // (pool index, multiplicity)
    i64 qe = q - g.eps();
    auto emit = [&]() {
        std::vector<qz_elt> lift;
        for (auto [idx, m] : chosen) {
            qz_elt x = pool[idx].second;
            for (i64 j = 0; j < pool[idx].first; ++j) {
                for (i64 t = 0; t < m; ++t) lift.push_back(x);
                x = x.scaled(eq);
            }
        }
        std::sort(lift.begin(), lift.end());

        // keep one representative per orbit of the (q - eps)-torsion shifts
        for (i64 t = 1; t < qe; ++t)
            if (translated(lift, qz_elt(t, qe)) < lift) return;

        ss_class c;
        c.lift = lift;
        for (const qz_elt& e : lift) {
            std::vector<qz_elt> cand = translated(lift, qz_elt(0, 1) - e);
            if (c.geometric_id.empty() || cand < c.geometric_id) c.geometric_id = cand;
        }

        // alpha against the least stable lift of the geometric class
        i64 a_ord = stabilizer_order(n, lift);
        i64 span = a_ord * qe;
        std::vector<qz_elt> best = lift;
        qz_elt best_c(0, 1);
        for (i64 t = 1; t < span; ++t) {
            qz_elt shift(t, span);
            std::vector<qz_elt> cand = translated(lift, shift);
            if (cand < best) {
                best = cand;
                best_c = shift;
            }
        }
        qz_elt torsor = best_c.scaled(-(eq - 1));  // (eps q - 1) c0 with c0 = -best_c
        i64 h = gcd_i(qe, a_ord);
        c.alpha = h == 1 ? 0 : a_coordinate(torsor, a_ord) % h;
        out.push_back(std::move(c));
    };
    std::function<void(size_t, i64)> rec = [&](size_t idx, i64 remaining) {
        if (remaining == 0) {
            emit();
            return;
        }
        // pool is grouped by ascending orbit size, nothing ahead can fit
        if (idx >= pool.size() || remaining < pool[idx].first) return;
        i64 k = pool[idx].first;
        rec(idx + 1, remaining);
        for (i64 m = 1; m * k <= remaining; ++m) {
            chosen.emplace_back(idx, m);
            rec(idx + 1, remaining - m * k);
            chosen.pop_back();
        }
    };
    rec(0, n);

    std::sort(out.begin(), out.end(), [](const ss_class& x, const ss_class& y) {
        if (x.geometric_id != y.geometric_id) return x.geometric_id < y.geometric_id;
        return x.alpha < y.alpha;
    });
    return out;
}

class_invariants invariants_of(const dual_group& g, const ss_class& c) {
    if ((i64)c.lift.size() != g.n) throw std::invalid_argument("invariants_of: wrong lift size");
    check_stable(g, c.lift);
    i64 a_ord = stabilizer_order(g.n, c.lift);
    fin_ab_group a_s = fin_ab_group::cyclic(a_ord);
    ab_hom frob = ab_hom::scalar(a_s, g.eps() * g.q);
    fin_ab_group h1 = endo_h1(frob).cokernel;

    std::map<qz_elt, i64> mult;
    for (const qz_elt& x : c.lift) ++mult[x];
    std::vector<orbit_info> orbits = frobenius_orbits(g, c.lift);
    std::vector<i64> wtype;
    for (const orbit_info& o : orbits) wtype.push_back(o.mult);
    std::sort(wtype.rbegin(), wtype.rend());
    return class_invariants{a_ord, a_s, frob, h1, mult, orbits, wtype};
}

bool cuspidal_test(const dual_group& g, const ss_class& c, const qz_elt& a) {
    if (!(translated(c.lift, a) == c.lift))
        throw std::invalid_argument("cuspidal_test: a does not stabilize the class");
    std::set<qz_elt> distinct(c.lift.begin(), c.lift.end());
    // one a-orbit filling all n slots: no proper a-stable block decomposition
    return (i64)distinct.size() == g.n && a.order() == g.n;
}

std::vector<levi_block> l_sa(const dual_group& g, const ss_class& c, const qz_elt& a) {
    if (!(translated(c.lift, a) == c.lift))
        throw std::invalid_argument("l_sa: a does not stabilize the class");
    std::map<qz_elt, i64> mult;
    for (const qz_elt& x : c.lift) ++mult[x];

    // the multiset splits into a-orbit shaped blocks of size ord(a),
    // one per orbit of <a> on distinct eigenvalues and unit of multiplicity
    std::map<qz_elt, i64> blocks;  // least element of the orbit -> multiplicity
    std::map<qz_elt, qz_elt> block_of;
    i64 ord = a.order();
    for (const auto& [e, m] : mult) {
        if (block_of.count(e)) continue;
        qz_elt least = e;
        qz_elt x = e;
        for (i64 j = 0; j < ord; ++j) {
            if (x < least) least = x;
            x = x + a;
        }
        x = e;
        for (i64 j = 0; j < ord; ++j) {
            block_of[x] = least;
            x = x + a;
        }
        blocks[least] = m;
    }

    // F* permutes the blocks; each of the m copies closes its own F*-orbit
    std::vector<levi_block> out;
    std::set<qz_elt> used;
    i64 eq = g.eps() * g.q;
    for (const auto& [least, m] : blocks) {
        if (used.count(least)) continue;
        i64 len = 0;
        qz_elt b = least;
        do {
            used.insert(b);
            ++len;
            b = block_of.at(b.scaled(eq));
        } while (!(b == least));
        levi_block lb;
        lb.size = ord;
        lb.orbit_len = len;
        lb.twisted = g.twisted && len % 2 == 1;
        for (i64 j = 0; j < m; ++j) out.push_back(lb);
    }
    std::sort(out.begin(), out.end(), [](const levi_block& x, const levi_block& y) {
        if (x.size != y.size) return x.size > y.size;
        if (x.orbit_len != y.orbit_len) return x.orbit_len > y.orbit_len;
        return x.twisted < y.twisted;
    });
    return out;
}

cyclotomic central_character(const dual_group& g, const ss_class& c, const qz_elt& z) {
    i64 zmod = gcd_i(p_prime_part(g.n, g.p), g.q - g.eps());
    if (zmod % z.den != 0)
        throw std::invalid_argument("central_character: z outside the fixed center");

    // j(d * (eps q - 1) * sum of exponents); per-orbit norms collapse to this
    mpq_class total(0);
    for (const qz_elt& x : c.lift) total += mpq_class((long)x.num, (long)x.den);
    mpq_class v = total * (g.eps() * g.q - 1) * mpq_class((long)z.num, (long)z.den);
    v.canonicalize();
    mpz_class num = v.get_num() % v.get_den();
    if (num < 0) num += v.get_den();
    return cyclotomic::root_of_unity(v.get_den().get_si(), num.get_si());
}

}  // namespace typea
