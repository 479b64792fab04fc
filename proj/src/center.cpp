#include "typea/center.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace typea {

namespace {

std::vector<i64> apply_int(const int_matrix& m, const std::vector<i64>& x) {
    if ((int)x.size() != m.cols) throw std::invalid_argument("apply_int: size mismatch");
    std::vector<i64> out(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i] += (i64)m.at(i, j).get_si() * x[j];
    return out;
}

/* p'-part of the cokernel of an integer matrix with full column rank */
struct coker_proj {
    snf_result snf;
    std::vector<int> kept;
    std::vector<i64> mods;
    fin_ab_group group;

    explicit coker_proj(const int_matrix& n, i64 p) : snf(smith_normal_form(n)) {
        for (int i = 0; i < snf.s.rows && i < snf.s.cols; ++i) {
            i64 s = (i64)snf.s.at(i, i).get_si();
            if (s == 0) throw std::logic_error("coker_proj: not full rank");
            while (s % p == 0) s /= p;
            if (s > 1) {
                kept.push_back(i);
                mods.push_back(s);
            }
        }
        group = mods.empty() ? fin_ab_group::trivial() : fin_ab_group(mods);
    }

    ab_elt project(const std::vector<i64>& x) const {
        std::vector<i64> v = apply_int(snf.u, x);
        ab_elt out(kept.size());
        for (size_t k = 0; k < kept.size(); ++k) out[k] = mod_i(v[(size_t)kept[k]], mods[k]);
        return out;
    }

    std::vector<i64> lift(size_t k) const {
        std::vector<i64> x(snf.u_inv.rows, 0);
        for (int i = 0; i < snf.u_inv.rows; ++i)
            x[(size_t)i] = (i64)snf.u_inv.at(i, kept[k]).get_si();
        return x;
    }
};

i64 total_labels(const std::vector<i64>& ns) {
    i64 t = 0;
    for (i64 n : ns) t += n - 1;
    return t;
}

/* global label image under the graph part of the Frobenius */
i64 frobenius_label(const std::vector<i64>& ns, const frobenius_data& frob, i64 j) {
    i64 offset = 0;
    for (size_t f = 0; f < ns.size(); ++f) {
        i64 r = ns[f] - 1;
        if (j <= offset + r) {
            i64 local = j - offset;
            if (frob.twisted[f]) local = ns[f] - local;
            i64 target = frob.factor_perm[f];
            if (ns[(size_t)target] != ns[f])
                throw std::invalid_argument("frobenius_label: factor sizes differ");
            i64 t_offset = 0;
            for (i64 g = 0; g < target; ++g) t_offset += ns[(size_t)g] - 1;
            return t_offset + local;
        }
        offset += r;
    }
    throw std::invalid_argument("frobenius_label: label out of range");
}

/* blocks of the composition cut out by a label subset, factor by factor */
std::vector<i64> composition_of(const std::vector<i64>& ns, const levi_label& I) {
    std::vector<i64> parts;
    i64 offset = 0;
    for (i64 n : ns) {
        i64 prev = 0;
        for (i64 local = 1; local < n; ++local) {
            if (std::count(I.begin(), I.end(), offset + local)) continue;
            parts.push_back(local - prev);
            prev = local;
        }
        parts.push_back(n - prev);
        offset += n - 1;
    }
    return parts;
}

}  // namespace

center_data center_group(const root_datum& datum, const frobenius_data& frob) {
    i64 r = total_labels(datum.ns);
    if ((i64)datum.labels.size() != r)
        throw std::invalid_argument("center_group: requires the full base");
    if (datum.ns.size() > 1 && datum.d != 1)
        throw std::invalid_argument("center_group: quotient lattice needs one factor");

    // columns: the coweight coordinates of a basis of Y; the first basis
    // vector of each factor absorbs the lattice index
    int_matrix nmat((int)r, (int)r);
    i64 offset = 0;
    for (i64 n : datum.ns) {
        i64 rf = n - 1;
        for (i64 j = 1; j <= rf; ++j) {
            int col = (int)(offset + j - 1);
            if (j == 1 && datum.d > 1) {
                nmat.at((int)(offset + rf - 1), col) = n / datum.d;
            } else {
                nmat.at(col, col) = 2;
                if (j > 1) nmat.at(col - 1, col) = -1;
                if (j < rf) nmat.at(col + 1, col) = -1;
            }
        }
        offset += rf;
    }

    coker_proj ck(nmat, frob.p);
    std::vector<ab_elt> coweights;
    for (i64 j = 1; j <= r; ++j) {
        std::vector<i64> e(r, 0);
        e[(size_t)j - 1] = 1;
        coweights.push_back(ck.project(e));
    }
    std::vector<ab_elt> images;
    for (size_t k = 0; k < ck.group.rank(); ++k) {
        std::vector<i64> x = ck.lift(k);
        std::vector<i64> fx(r, 0);
        for (i64 j = 1; j <= r; ++j)
            fx[(size_t)(frobenius_label(datum.ns, frob, j) - 1)] += frob.q * x[(size_t)j - 1];
        images.push_back(ck.project(fx));
    }
    return center_data{ck.group, coweights, ab_hom::from_images(ck.group, ck.group, images),
                       datum.ns, datum.d, frob.p};
}

subgroup_data levi_kernel(const center_data& c, const levi_label& I) {
    for (size_t k = 0; k < I.size(); ++k)
        if (I[k] < 1 || I[k] > (i64)c.coweight_images.size() || (k > 0 && I[k] <= I[k - 1]))
            throw std::invalid_argument("levi_kernel: bad label set");
    std::vector<ab_elt> gens;
    for (i64 j = 1; j <= (i64)c.coweight_images.size(); ++j)
        if (!std::count(I.begin(), I.end(), j)) gens.push_back(c.coweight_images[(size_t)j - 1]);
    return subgroup_generated(c.group, gens);
}

std::vector<i64> affine_center_iso(const center_data& c, const ab_elt& z) {
    if (c.ns.size() != 1 || c.d != 1)
        throw std::invalid_argument("affine_center_iso: needs the simply connected quasi-simple case");
    i64 n = c.ns[0];
    if (n % c.p == 0)
        throw std::invalid_argument("affine_center_iso: p divides n");
    if (!c.group.is_valid(z)) throw std::invalid_argument("affine_center_iso: bad element");

    ab_elt zz = c.group.reduce(z);
    i64 cc = -1;
    for (i64 k = 0; k < n; ++k)
        if (c.group.scale(k, c.coweight_images[0]) == zz) cc = k;
    if (cc < 0) throw std::logic_error("affine_center_iso: no discrete log");

    std::vector<i64> nodes((size_t)n);
    std::iota(nodes.begin(), nodes.end(), 0);
    if (cc == 0) return nodes;

    // coordinate action of w_Delta * w_{Delta minus alpha_cc}
    std::vector<i64> comp((size_t)n);
    for (i64 i = 0; i < n; ++i) {
        i64 sub = i < cc ? cc - 1 - i : cc + n - 1 - i;
        comp[(size_t)i] = n - 1 - sub;
    }
    std::vector<i64> out((size_t)n, -1);
    for (i64 j = 0; j < n; ++j) {
        i64 a = comp[(size_t)((j + n - 1) % n)];
        i64 b = comp[(size_t)j];
        if (b != (a + 1) % n) throw std::logic_error("affine_center_iso: image not a node");
        out[(size_t)j] = b % n;
    }
    return out;
}

levi_label self_opposed_closure(const root_datum& datum, const levi_label& I) {
    for (size_t k = 0; k < I.size(); ++k)
        if (I[k] < 1 || I[k] > total_labels(datum.ns) || (k > 0 && I[k] <= I[k - 1]))
            throw std::invalid_argument("self_opposed_closure: bad label set");

    levi_label result;
    i64 offset = 0;
    for (i64 n : datum.ns) {
        if (n > 10) throw std::invalid_argument("self_opposed_closure: factor too large");
        std::vector<bool> cur((size_t)n, false);
        for (i64 j : I)
            if (j > offset && j < offset + n) cur[(size_t)(j - offset)] = true;
        for (;;) {
            std::vector<bool> inter = cur;
            std::vector<i64> w((size_t)n);
            std::iota(w.begin(), w.end(), 0);
            do {
                bool in_wi = true;
                for (i64 j = 1; j < n && in_wi; ++j)
                    if (cur[(size_t)j] && w[(size_t)j] != w[(size_t)j - 1] + 1) in_wi = false;
                if (!in_wi) continue;
                std::vector<bool> image((size_t)n, false);
                for (i64 j = 1; j < n; ++j)
                    if (cur[(size_t)j]) image[(size_t)w[(size_t)j]] = true;
                for (i64 j = 1; j < n; ++j)
                    if (inter[(size_t)j] && !image[(size_t)j]) inter[(size_t)j] = false;
            } while (std::next_permutation(w.begin(), w.end()));
            if (inter == cur) break;
            cur = inter;
        }
        for (i64 j = 1; j < n; ++j)
            if (cur[(size_t)j]) result.push_back(offset + j);
        offset += n - 1;
    }
    return result;
}

cuspidal_info cuspidal_data(const center_data& c, const root_datum& datum) {
    i64 r = total_labels(datum.ns);
    cuspidal_info info;
    for (const ab_char& zeta : all_chars(c.group)) {
        bool cuspidal = true;
        for (i64 j = 1; j <= r && cuspidal; ++j)
            if (zeta.in_kernel(c.coweight_images[(size_t)j - 1])) cuspidal = false;
        if (cuspidal) info.chars.push_back(zeta);
    }

    if (c.group.rank() > 1) throw std::invalid_argument("cuspidal_data: center not cyclic");
    if (r > 16) throw std::invalid_argument("cuspidal_data: base too large");
    i64 m = c.group.order();
    for (i64 e : divisors_of(m)) {
        i64 step = m / e;  // subgroup of order e holds the multiples of step
        levi_label best;
        std::vector<i64> best_comp;
        bool have = false;
        for (i64 mask = 0; mask < (i64(1) << r); ++mask) {
            levi_label I;
            bool ok = true;
            for (i64 j = 1; j <= r; ++j) {
                if (mask & (i64(1) << (j - 1))) {
                    I.push_back(j);
                } else if (m > 1 && c.coweight_images[(size_t)j - 1][0] % step != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<i64> comp = composition_of(c.ns, I);
            if (!have || I.size() < best.size() ||
                (I.size() == best.size() && comp < best_comp)) {
                best = I;
                best_comp = comp;
                have = true;
            }
        }
        info.min_levi[e] = best;
    }
    return info;
}

fin_ab_group h1_center(const center_data& c) { return endo_h1(c.frobenius).cokernel; }

}  // namespace typea
