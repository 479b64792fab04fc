#include "typea/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace typea {

perm perm_identity(i64 n) {
    perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

perm perm_mul(const perm& u, const perm& v) {
    if (u.size() != v.size()) throw std::invalid_argument("perm_mul: size mismatch");
    perm out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = u[v[i]];
    return out;
}

perm perm_inverse(const perm& u) {
    perm out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[u[i]] = (i64)i;
    return out;
}

partition perm_cycle_type(const perm& u) {
    std::vector<char> seen(u.size(), 0);
    std::vector<i64> parts;
    for (size_t i = 0; i < u.size(); ++i) {
        if (seen[i]) continue;
        i64 len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = (size_t)u[j];
            ++len;
        }
        parts.push_back(len);
    }
    return partition(parts);
}

std::vector<perm> all_perms(i64 n) {
    if (n < 0 || n > 8) throw std::invalid_argument("all_perms: degree out of range");
    perm p = perm_identity(n);
    std::vector<perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

void check_index_perm(const index_perm& p, const std::vector<i64>& degrees) {
    i64 d = (i64)degrees.size();
    if ((i64)p.size() != d) throw std::invalid_argument("wreath_group: permutation size mismatch");
    std::vector<char> seen(d, 0);
    for (i64 k = 0; k < d; ++k) {
        if (p[k] < 0 || p[k] >= d || seen[p[k]])
            throw std::invalid_argument("wreath_group: not a permutation");
        seen[p[k]] = 1;
        if (degrees[p[k]] != degrees[k])
            throw std::invalid_argument("wreath_group: action mixes components of unequal degree");
    }
}

index_perm index_power(const index_perm& p, i64 e) {
    index_perm out = perm_identity((i64)p.size());
    for (i64 i = 0; i < e; ++i) out = perm_mul(p, out);
    return out;
}

std::vector<std::vector<i64>> perm_cycles(const index_perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<std::vector<i64>> cycles;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<i64> cyc;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back((i64)j);
            j = (size_t)p[j];
        }
        cycles.push_back(cyc);
    }
    return cycles;
}

void check_labels(const wreath_group& w, const std::vector<partition>& lambdas) {
    if ((i64)lambdas.size() != w.comp_count())
        throw std::invalid_argument("one partition per component required");
    for (i64 k = 0; k < w.comp_count(); ++k)
        if (lambdas[k].size() != w.comp_degree(k))
            throw std::invalid_argument("partition size does not match component degree");
}

/* ambient element -> coordinates, for every element of the subgroup */
std::map<ab_elt, ab_elt> stab_coord_map(const fin_ab_group& amb, const subgroup_data& sub) {
    std::map<ab_elt, ab_elt> m;
    for (const ab_elt& x : sub.group.elements()) {
        ab_elt img = amb.zero();
        for (size_t i = 0; i < sub.gens.size(); ++i)
            img = amb.add(img, amb.scale(x[i], sub.gens[i]));
        m[img] = x;
    }
    return m;
}

bool in_young(const perm& u, const partition& mu) {
    i64 start = 0;
    for (i64 part : mu.parts) {
        for (i64 i = start; i < start + part; ++i)
            if (u[i] < start || u[i] >= start + part) return false;
        start += part;
    }
    return true;
}

i64 young_order(const partition& mu) {
    i64 r = 1;
    for (i64 part : mu.parts) r *= factorial_i(part);
    return r;
}

}  // namespace

wreath_group::wreath_group(std::vector<std::pair<i64, i64>> bl, fin_ab_group grp,
                           std::vector<index_perm> gp, index_perm outer)
    : blocks(std::move(bl)), a(std::move(grp)), gen_perms(std::move(gp)), phi(std::move(outer)) {
    if (blocks.empty()) throw std::invalid_argument("wreath_group: no blocks");
    for (const auto& [n, d] : blocks) {
        if (n < 1 || d < 1) throw std::invalid_argument("wreath_group: bad block");
        for (i64 j = 0; j < d; ++j) degrees.push_back(n);
    }
    if (gen_perms.size() != a.rank())
        throw std::invalid_argument("wreath_group: one permutation per generator required");
    for (size_t j = 0; j < gen_perms.size(); ++j) {
        check_index_perm(gen_perms[j], degrees);
        if (index_power(gen_perms[j], a.factors[j]) != perm_identity(comp_count()))
            throw std::invalid_argument("wreath_group: permutation order does not divide factor");
    }
    for (size_t i = 0; i < gen_perms.size(); ++i)
        for (size_t j = i + 1; j < gen_perms.size(); ++j)
            if (perm_mul(gen_perms[i], gen_perms[j]) != perm_mul(gen_perms[j], gen_perms[i]))
                throw std::invalid_argument("wreath_group: generator actions do not commute");
    if (phi.empty())
        phi = perm_identity(comp_count());
    else
        check_index_perm(phi, degrees);
}

index_perm wreath_group::perm_of(const ab_elt& e) const {
    if (!a.is_valid(e)) throw std::invalid_argument("perm_of: bad element");
    index_perm p = perm_identity(comp_count());
    for (size_t j = 0; j < gen_perms.size(); ++j)
        p = perm_mul(index_power(gen_perms[j], mod_i(e[j], a.factors[j])), p);
    return p;
}

i64 wreath_group::base_order() const {
    i64 r = 1;
    for (i64 n : degrees) r *= factorial_i(n);
    return r;
}

std::vector<partition> act_on_labels(const index_perm& p, const std::vector<partition>& lam) {
    if (p.size() != lam.size()) throw std::invalid_argument("act_on_labels: size mismatch");
    std::vector<partition> out(lam.size());
    for (size_t k = 0; k < lam.size(); ++k) out[p[k]] = lam[k];
    return out;
}

std::vector<std::pair<i64, perm>> pi_project(const wreath_group& w, const wreath_elt& g) {
    if ((i64)g.w.size() != w.comp_count()) throw std::invalid_argument("pi_project: bad element");
    for (i64 k = 0; k < w.comp_count(); ++k)
        if ((i64)g.w[k].size() != w.comp_degree(k))
            throw std::invalid_argument("pi_project: bad coordinate");
    index_perm s = w.perm_of(g.a);
    std::vector<std::pair<i64, perm>> out;
    for (const auto& cyc : perm_cycles(s)) {
        perm u = g.w[cyc[0]];
        for (size_t t = 1; t < cyc.size(); ++t) u = perm_mul(u, g.w[cyc[t]]);
        out.emplace_back(cyc[0], u);
    }
    return out;
}

std::vector<partition> pi_class(const wreath_group& w, const wreath_elt& g) {
    std::vector<partition> out;
    for (const auto& [lead, u] : pi_project(w, g)) out.push_back(perm_cycle_type(u));
    return out;
}

i64 canonical_extension_value(const wreath_group& w, const std::vector<partition>& lambdas,
                              const wreath_elt& g) {
    check_labels(w, lambdas);
    index_perm s = w.perm_of(g.a);
    if (act_on_labels(s, lambdas) != lambdas)
        throw std::invalid_argument("canonical_extension_value: label not stable");
    i64 v = 1;
    for (const auto& [lead, u] : pi_project(w, g))
        v *= char_value(lambdas[lead], perm_cycle_type(u));
    return v;
}

i64 label_dimension(const wreath_group& w, const std::vector<partition>& lambdas) {
    check_labels(w, lambdas);
    i64 d = 1;
    for (i64 k = 0; k < w.comp_count(); ++k) {
        partition id(std::vector<i64>(w.comp_degree(k), 1));
        d *= char_value(lambdas[k], id);
    }
    return d;
}

std::vector<wreath_char> irr_semidirect(const wreath_group& w) {
    i64 d = w.comp_count();
    std::vector<std::vector<partition>> per(d);
    i64 total = 1;
    for (i64 k = 0; k < d; ++k) {
        per[k] = all_partitions(w.comp_degree(k));
        total *= (i64)per[k].size();
        if (total > 200000) throw std::overflow_error("irr_semidirect: label set too large");
    }
    std::vector<std::pair<ab_elt, index_perm>> aelts;
    for (const ab_elt& e : w.a.elements()) aelts.emplace_back(e, w.perm_of(e));

    std::vector<wreath_char> out;
    std::vector<size_t> odo(d, 0);
    while (true) {
        std::vector<partition> lam(d);
        for (i64 k = 0; k < d; ++k) lam[k] = per[k][odo[k]];
        std::vector<ab_elt> stab_elts;
        bool least = true;
        for (const auto& [e, s] : aelts) {
            std::vector<partition> img = act_on_labels(s, lam);
            if (img < lam) {
                least = false;
                break;
            }
            if (img == lam) stab_elts.push_back(e);
        }
        if (least) {
            subgroup_data sub = subgroup_generated(w.a, stab_elts);
            i64 degree = (w.a.order() / (i64)stab_elts.size()) * label_dimension(w, lam);
            for (const ab_char& xi : all_chars(sub.group)) out.push_back({lam, sub, xi, degree});
        }
        i64 k = d - 1;
        while (k >= 0 && ++odo[k] == per[k].size()) odo[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

std::vector<i64> cycle_leaders(const wreath_group& w, const ab_elt& a) {
    std::vector<i64> out;
    for (const auto& cyc : perm_cycles(w.perm_of(a))) out.push_back(cyc[0]);
    return out;
}

std::vector<std::vector<partition>> fixed_subgroup_classes(const wreath_group& w,
                                                           const ab_elt& a) {
    std::vector<i64> leaders = cycle_leaders(w, a);
    std::vector<std::vector<partition>> per;
    i64 total = 1;
    for (i64 lead : leaders) {
        per.push_back(all_partitions(w.comp_degree(lead)));
        total *= (i64)per.back().size();
        if (total > 100000) throw std::overflow_error("fixed_subgroup_classes: too many classes");
    }
    std::vector<std::vector<partition>> out;
    std::vector<size_t> odo(per.size(), 0);
    while (true) {
        std::vector<partition> key(per.size());
        for (size_t c = 0; c < per.size(); ++c) key[c] = per[c][odo[c]];
        out.push_back(key);
        i64 k = (i64)per.size() - 1;
        while (k >= 0 && ++odo[k] == per[k].size()) odo[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

std::map<std::vector<partition>, cyclotomic> twisted_induce(
    const wreath_group& w, const ab_elt& a, const std::vector<partition>& young,
    const std::map<std::vector<std::vector<partition>>, cyclotomic>& f) {
    check_labels(w, young);
    index_perm s = w.perm_of(a);
    if (act_on_labels(s, young) != young)
        throw std::invalid_argument("twisted_induce: subgroup not stable");
    std::vector<std::vector<i64>> cycles = perm_cycles(s);

    std::map<std::vector<partition>, cyclotomic> result;
    for (const auto& key : fixed_subgroup_classes(w, a)) result[key] = cyclotomic();

    // slots: one per Young part of each cycle leader
    struct slot {
        size_t cyc;
        std::vector<partition> opts;
    };
    std::vector<slot> slots;
    i64 total = 1;
    for (size_t c = 0; c < cycles.size(); ++c) {
        for (i64 part : young[cycles[c][0]].parts) {
            slots.push_back({c, all_partitions(part)});
            total *= (i64)slots.back().opts.size();
            if (total > 1000000) throw std::overflow_error("twisted_induce: too many classes");
        }
    }

    std::vector<size_t> odo(slots.size(), 0);
    while (true) {
        std::vector<std::vector<partition>> key(cycles.size());
        std::vector<std::vector<i64>> fused_parts(cycles.size());
        i64 z = 1;
        for (size_t t = 0; t < slots.size(); ++t) {
            const partition& pi = slots[t].opts[odo[t]];
            key[slots[t].cyc].push_back(pi);
            for (i64 p : pi.parts) fused_parts[slots[t].cyc].push_back(p);
            z *= centralizer_order(pi);
        }
        auto it = f.find(key);
        if (it != f.end() && !it->second.is_zero()) {
            std::vector<partition> fused(cycles.size());
            for (size_t c = 0; c < cycles.size(); ++c) fused[c] = partition(fused_parts[c]);
            result[fused] = result[fused] + it->second.divided_by(mpq_class(z));
        }
        i64 k = (i64)slots.size() - 1;
        while (k >= 0 && ++odo[k] == slots[k].opts.size()) odo[k--] = 0;
        if (k < 0) break;
    }

    for (auto& [tau, val] : result) {
        i64 zt = 1;
        for (const partition& pi : tau) zt *= centralizer_order(pi);
        val = val * mpq_class(zt);
    }
    return result;
}

brute_wreath::brute_wreath(const wreath_group& grp) : w(grp) {
    i64 order = w.a.order();
    for (i64 k = 0; k < w.comp_count(); ++k) {
        order *= factorial_i(w.comp_degree(k));
        if (order > 2000) throw std::overflow_error("brute_wreath: group larger than 2000");
    }
    std::vector<std::vector<perm>> comp(w.comp_count());
    for (i64 k = 0; k < w.comp_count(); ++k) comp[k] = all_perms(w.comp_degree(k));
    std::vector<ab_elt> aelts = w.a.elements();

    std::vector<size_t> odo(w.comp_count(), 0);
    while (true) {
        std::vector<perm> tup(w.comp_count());
        for (i64 k = 0; k < w.comp_count(); ++k) tup[k] = comp[k][odo[k]];
        for (const ab_elt& e : aelts) elts.push_back({tup, e});
        i64 k = w.comp_count() - 1;
        while (k >= 0 && ++odo[k] == comp[k].size()) odo[k--] = 0;
        if (k < 0) break;
    }
    for (size_t i = 0; i < elts.size(); ++i) index[{elts[i].w, elts[i].a}] = (i64)i;

    cls_of.assign(elts.size(), -1);
    for (size_t i = 0; i < elts.size(); ++i) {
        if (cls_of[i] >= 0) continue;
        i64 id = (i64)cls_rep.size();
        cls_rep.push_back((i64)i);
        i64 count = 0;
        for (const wreath_elt& x : elts) {
            i64 j = idx(mul(mul(x, elts[i]), inv(x)));
            if (cls_of[j] < 0) {
                cls_of[j] = id;
                ++count;
            }
        }
        cls_size.push_back(count);
    }
}

wreath_elt brute_wreath::mul(const wreath_elt& x, const wreath_elt& y) const {
    index_perm s = w.perm_of(x.a);
    i64 d = w.comp_count();
    std::vector<perm> shifted(d);
    for (i64 k = 0; k < d; ++k) shifted[s[k]] = y.w[k];
    wreath_elt out;
    out.w.resize(d);
    for (i64 k = 0; k < d; ++k) out.w[k] = perm_mul(x.w[k], shifted[k]);
    out.a = w.a.add(x.a, y.a);
    return out;
}

wreath_elt brute_wreath::inv(const wreath_elt& x) const {
    index_perm s = w.perm_of(x.a);
    i64 d = w.comp_count();
    wreath_elt out;
    out.w.resize(d);
    for (i64 k = 0; k < d; ++k) out.w[k] = perm_inverse(x.w[s[k]]);
    out.a = w.a.neg(x.a);
    return out;
}

i64 brute_wreath::idx(const wreath_elt& x) const {
    auto it = index.find({x.w, x.a});
    if (it == index.end()) throw std::invalid_argument("brute_wreath: unknown element");
    return it->second;
}

std::vector<cyclotomic> induced_char_values(const brute_wreath& bg, const wreath_char& wc) {
    std::map<ab_elt, ab_elt> coords = stab_coord_map(bg.w.a, wc.stab);
    mpq_class gchi(bg.w.base_order() * (i64)coords.size());
    std::vector<cyclotomic> out;
    for (i64 c = 0; c < bg.n_classes(); ++c) {
        const wreath_elt& g = bg.elts[bg.cls_rep[c]];
        cyclotomic acc;
        for (const wreath_elt& x : bg.elts) {
            wreath_elt h = bg.mul(bg.mul(bg.inv(x), g), x);
            auto it = coords.find(h.a);
            if (it == coords.end()) continue;
            i64 v = canonical_extension_value(bg.w, wc.lambdas, h);
            acc = acc + wc.xi.eval(it->second) * mpq_class(v);
        }
        out.push_back(acc.divided_by(gchi));
    }
    return out;
}

std::vector<cyclotomic> pi_induced_values(const brute_wreath& bg, const wreath_char& wc) {
    std::map<ab_elt, ab_elt> coords = stab_coord_map(bg.w.a, wc.stab);
    i64 ysub = 1;
    for (i64 k = 0; k < bg.w.comp_count(); ++k) ysub *= young_order(wc.lambdas[k]);
    mpq_class glam(ysub * (i64)coords.size());
    std::vector<cyclotomic> out;
    for (i64 c = 0; c < bg.n_classes(); ++c) {
        const wreath_elt& g = bg.elts[bg.cls_rep[c]];
        cyclotomic acc;
        for (const wreath_elt& x : bg.elts) {
            wreath_elt h = bg.mul(bg.mul(bg.inv(x), g), x);
            auto it = coords.find(h.a);
            if (it == coords.end()) continue;
            bool inside = true;
            for (i64 k = 0; inside && k < bg.w.comp_count(); ++k)
                inside = in_young(h.w[k], wc.lambdas[k]);
            if (!inside) continue;
            acc = acc + wc.xi.eval(it->second);
        }
        out.push_back(acc.divided_by(glam));
    }
    return out;
}

bool integrality_test(const brute_wreath& bg, const std::vector<cyclotomic>& eta) {
    if ((i64)eta.size() != bg.n_classes())
        throw std::invalid_argument("integrality_test: one value per class required");
    for (const wreath_char& wc : irr_semidirect(bg.w)) {
        std::map<ab_elt, ab_elt> coords = stab_coord_map(bg.w.a, wc.stab);
        i64 ysub = 1;
        for (i64 k = 0; k < bg.w.comp_count(); ++k) ysub *= young_order(wc.lambdas[k]);
        mpq_class glam(ysub * (i64)coords.size());
        cyclotomic acc;
        for (size_t i = 0; i < bg.elts.size(); ++i) {
            const wreath_elt& x = bg.elts[i];
            auto it = coords.find(x.a);
            if (it == coords.end()) continue;
            bool inside = true;
            for (i64 k = 0; inside && k < bg.w.comp_count(); ++k)
                inside = in_young(x.w[k], wc.lambdas[k]);
            if (!inside) continue;
            acc = acc + eta[bg.cls_of[i]] * wc.xi.eval(it->second).conj();
        }
        acc = acc.divided_by(glam);
        mpq_class r;
        if (!acc.is_rational(&r) || r.get_den() != 1) return false;
    }
    return true;
}

}  // namespace typea
