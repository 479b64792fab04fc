#include "typea/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace typea {

namespace {

__int128 sl_order(i64 n, i64 q) {
    __int128 v = 1;
    for (i64 k = 0; k < n * (n - 1) / 2; k++) v *= q;
    for (i64 k = 2; k <= n; k++) {
        __int128 d = 1;
        for (i64 j = 0; j < k; j++) d *= q;
        v *= d - 1;
        if (v > (__int128)1 << 100) return v;
    }
    return v;
}

__int128 su_order(i64 n, i64 q) {
    __int128 v = 1;
    for (i64 k = 0; k < n * (n - 1) / 2; k++) v *= q;
    for (i64 k = 2; k <= n; k++) {
        __int128 d = 1;
        for (i64 j = 0; j < k; j++) d *= q;
        v *= d - (k % 2 == 0 ? 1 : -1);
        if (v > (__int128)1 << 100) return v;
    }
    return v;
}

void check_scale(__int128 expected) {
    if (expected > mat_group_bound) throw std::invalid_argument("group order bound exceeded");
}

fq_mat perm_mat(const fq_field& f, const std::vector<i64>& image) {
    i64 n = (i64)image.size();
    fq_mat m(n * n, f.zero());
    for (i64 i = 0; i < n; i++) m[i * n + image[i]] = f.one();
    return m;
}

}  // namespace

std::vector<i64> mat_group::key_of(const fq_mat& m) const {
    std::vector<i64> k;
    k.reserve(m.size() * field->s);
    for (const auto& e : m) k.insert(k.end(), e.begin(), e.end());
    return k;
}

fq_mat mat_group::canonical(fq_mat m) const {
    if (!projective) return m;
    for (auto& e : m) {
        if (field->is_zero(e)) continue;
        fq_elt c = field->inv(e);
        for (auto& x : m) x = field->mul(x, c);
        break;
    }
    return m;
}

fq_mat mat_group::multiply(const fq_mat& a, const fq_mat& b) const {
    const fq_field& f = *field;
    fq_mat c(dim * dim, f.zero());
    for (i64 i = 0; i < dim; i++)
        for (i64 k = 0; k < dim; k++) {
            const fq_elt& aik = a[i * dim + k];
            if (f.is_zero(aik)) continue;
            for (i64 j = 0; j < dim; j++) {
                const fq_elt& bkj = b[k * dim + j];
                if (f.is_zero(bkj)) continue;
                c[i * dim + j] = f.add(c[i * dim + j], f.mul(aik, bkj));
            }
        }
    return canonical(std::move(c));
}

fq_mat mat_group::inverse(const fq_mat& a) const {
    const fq_field& f = *field;
    fq_mat w = a, inv = identity_mat(f, dim);
    for (i64 col = 0; col < dim; col++) {
        i64 piv = -1;
        for (i64 r = col; r < dim; r++)
            if (!f.is_zero(w[r * dim + col])) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular matrix");
        if (piv != col)
            for (i64 j = 0; j < dim; j++) {
                std::swap(w[piv * dim + j], w[col * dim + j]);
                std::swap(inv[piv * dim + j], inv[col * dim + j]);
            }
        fq_elt c = f.inv(w[col * dim + col]);
        for (i64 j = 0; j < dim; j++) {
            w[col * dim + j] = f.mul(w[col * dim + j], c);
            inv[col * dim + j] = f.mul(inv[col * dim + j], c);
        }
        for (i64 r = 0; r < dim; r++) {
            if (r == col || f.is_zero(w[r * dim + col])) continue;
            fq_elt m = w[r * dim + col];
            for (i64 j = 0; j < dim; j++) {
                w[r * dim + j] = f.add(w[r * dim + j], f.neg(f.mul(m, w[col * dim + j])));
                inv[r * dim + j] = f.add(inv[r * dim + j], f.neg(f.mul(m, inv[col * dim + j])));
            }
        }
    }
    return canonical(std::move(inv));
}

int mat_group::lookup(const fq_mat& m) const {
    auto it = index.find(key_of(m));
    return it == index.end() ? -1 : it->second;
}

int mat_group::mul(int a, int b) const {
    int r = lookup(multiply(elements[a], elements[b]));
    if (r < 0) throw std::logic_error("product escaped the group");
    return r;
}

int mat_group::power(int a, i64 k) const {
    int r = 0, b = a;
    for (; k > 0; k >>= 1) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

i64 mat_group::element_order(int a) const {
    i64 o = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        o++;
        if (o > order()) throw std::logic_error("order overflow");
    }
    return o;
}

i64 mat_group::exponent() const {
    i64 e = 1;
    for (int r : class_rep) e = std::lcm(e, element_order(r));
    return e;
}

const fq_elt& mat_group::entry(int e, i64 i, i64 j) const { return elements[e][i * dim + j]; }

bool mat_group::is_identity(int e) const { return e == 0; }

bool mat_group::is_diagonal(int e) const {
    for (i64 i = 0; i < dim; i++)
        for (i64 j = 0; j < dim; j++)
            if (i != j && !field->is_zero(entry(e, i, j))) return false;
    return true;
}

bool mat_group::is_unitriangular(int e) const {
    const fq_field& f = *field;
    fq_elt one = f.one();
    for (i64 i = 0; i < dim; i++) {
        if (entry(e, i, i) != one) return false;
        for (i64 j = 0; j < i; j++)
            if (!f.is_zero(entry(e, i, j))) return false;
    }
    return true;
}

bool mat_group::is_unipotent(int e) const {
    const fq_field& f = *field;
    fq_mat nil = elements[e];
    for (i64 i = 0; i < dim; i++) nil[i * dim + i] = f.add(nil[i * dim + i], f.neg(f.one()));
    fq_mat pw = nil;
    for (i64 k = 1; k < dim; k++) {
        fq_mat nx(dim * dim, f.zero());
        for (i64 i = 0; i < dim; i++)
            for (i64 t = 0; t < dim; t++) {
                if (f.is_zero(pw[i * dim + t])) continue;
                for (i64 j = 0; j < dim; j++)
                    nx[i * dim + j] = f.add(nx[i * dim + j], f.mul(pw[i * dim + t], nil[t * dim + j]));
            }
        pw = nx;
    }
    for (const auto& x : pw)
        if (!f.is_zero(x)) return false;
    return true;
}

bool mat_group::is_regular_unipotent(int e) const {
    if (!is_unipotent(e)) return false;
    // rank of g - 1 must be dim - 1
    const fq_field& f = *field;
    fq_mat w = elements[e];
    for (i64 i = 0; i < dim; i++) w[i * dim + i] = f.add(w[i * dim + i], f.neg(f.one()));
    i64 rank = 0, row = 0;
    for (i64 col = 0; col < dim && row < dim; col++) {
        i64 piv = -1;
        for (i64 r = row; r < dim; r++)
            if (!f.is_zero(w[r * dim + col])) { piv = r; break; }
        if (piv < 0) continue;
        for (i64 j = 0; j < dim; j++) std::swap(w[piv * dim + j], w[row * dim + j]);
        fq_elt c = f.inv(w[row * dim + col]);
        for (i64 j = 0; j < dim; j++) w[row * dim + j] = f.mul(w[row * dim + j], c);
        for (i64 r = 0; r < dim; r++) {
            if (r == row || f.is_zero(w[r * dim + col])) continue;
            fq_elt m = w[r * dim + col];
            for (i64 j = 0; j < dim; j++)
                w[r * dim + j] = f.add(w[r * dim + j], f.neg(f.mul(m, w[row * dim + j])));
        }
        row++;
        rank++;
    }
    return rank == dim - 1;
}

fq_mat identity_mat(const fq_field& f, i64 dim) {
    fq_mat m(dim * dim, f.zero());
    for (i64 i = 0; i < dim; i++) m[i * dim + i] = f.one();
    return m;
}

fq_elt mat_det(const fq_field& f, i64 dim, const fq_mat& m) {
    fq_mat w = m;
    fq_elt det = f.one();
    for (i64 col = 0; col < dim; col++) {
        i64 piv = -1;
        for (i64 r = col; r < dim; r++)
            if (!f.is_zero(w[r * dim + col])) { piv = r; break; }
        if (piv < 0) return f.zero();
        if (piv != col) {
            for (i64 j = 0; j < dim; j++) std::swap(w[piv * dim + j], w[col * dim + j]);
            det = f.neg(det);
        }
        det = f.mul(det, w[col * dim + col]);
        fq_elt c = f.inv(w[col * dim + col]);
        for (i64 j = col; j < dim; j++) w[col * dim + j] = f.mul(w[col * dim + j], c);
        for (i64 r = col + 1; r < dim; r++) {
            if (f.is_zero(w[r * dim + col])) continue;
            fq_elt mm = w[r * dim + col];
            for (i64 j = col; j < dim; j++)
                w[r * dim + j] = f.add(w[r * dim + j], f.neg(f.mul(mm, w[col * dim + j])));
        }
    }
    return det;
}

bool unitary_wrt_antidiag(const fq_field& f, i64 dim, const fq_mat& m, i64 sub_s) {
    i64 q = pow_i(f.p, sub_s);
    // (bar m^T J m)_{ij} = sum_k bar(m_{ki}) m_{dim-1-k, j}
    for (i64 i = 0; i < dim; i++)
        for (i64 j = 0; j < dim; j++) {
            fq_elt acc = f.zero();
            for (i64 k = 0; k < dim; k++)
                acc = f.add(acc, f.mul(f.pow(m[k * dim + i], q), m[(dim - 1 - k) * dim + j]));
            bool want_one = (i + j == dim - 1);
            if (want_one && acc != f.one()) return false;
            if (!want_one && !f.is_zero(acc)) return false;
        }
    return true;
}

mat_group matrix_group(const fq_field& f, i64 dim, bool projective,
                       const std::string& name, const std::vector<fq_mat>& gen_mats) {
    mat_group g;
    g.field = &f;
    g.dim = dim;
    g.projective = projective;
    g.name = name;

    g.elements.push_back(g.canonical(identity_mat(f, dim)));
    g.index[g.key_of(g.elements[0])] = 0;
    std::vector<fq_mat> gens;
    for (const auto& m : gen_mats) gens.push_back(g.canonical(m));

    std::deque<int> bfs{0};
    while (!bfs.empty()) {
        int a = bfs.front();
        bfs.pop_front();
        for (const auto& gm : gens) {
            fq_mat c = g.multiply(g.elements[a], gm);
            auto key = g.key_of(c);
            if (g.index.count(key)) continue;
            if ((i64)g.elements.size() >= mat_group_bound)
                throw std::invalid_argument("group order bound exceeded");
            int id = (int)g.elements.size();
            g.index[key] = id;
            g.elements.push_back(std::move(c));
            bfs.push_back(id);
        }
    }
    for (const auto& gm : gens) g.gens.push_back(g.lookup(gm));

    g.inv_of.resize(g.elements.size());
    for (size_t e = 0; e < g.elements.size(); e++) {
        int r = g.lookup(g.inverse(g.elements[e]));
        if (r < 0) throw std::logic_error("inverse escaped the group");
        g.inv_of[e] = r;
    }

    std::vector<fq_mat> conj, conj_inv;
    for (int ge : g.gens) {
        conj.push_back(g.elements[ge]);
        conj_inv.push_back(g.elements[g.inv_of[ge]]);
    }
    g.class_of.assign(g.elements.size(), -1);
    for (int x = 0; x < (int)g.elements.size(); x++) {
        if (g.class_of[x] >= 0) continue;
        int cid = (int)g.classes.size();
        std::vector<int> members{x};
        g.class_of[x] = cid;
        for (size_t h = 0; h < members.size(); h++) {
            for (size_t t = 0; t < conj.size(); t++) {
                fq_mat y = g.multiply(conj[t], g.multiply(g.elements[members[h]], conj_inv[t]));
                int yi = g.lookup(y);
                if (yi < 0) throw std::logic_error("conjugate escaped the group");
                if (g.class_of[yi] >= 0) continue;
                g.class_of[yi] = cid;
                members.push_back(yi);
            }
        }
        std::sort(members.begin(), members.end());
        g.class_rep.push_back(members[0]);
        g.classes.push_back(std::move(members));
    }
    return g;
}

mat_group sl_group(i64 n, i64 q) {
    i64 p;
    int s;
    if (n < 2 || !prime_power_decompose(q, p, s))
        throw std::invalid_argument("bad matrix group descriptor");
    check_scale(sl_order(n, q));
    const fq_field& f = fq_field::get(p, s);
    std::vector<fq_mat> gens;
    for (i64 i = 0; i + 1 < n; i++)
        for (i64 t = 0; t < s; t++) {
            fq_elt b = f.zero();
            b[t] = 1;
            fq_mat up = identity_mat(f, n), lo = identity_mat(f, n);
            up[i * n + (i + 1)] = b;
            lo[(i + 1) * n + i] = b;
            gens.push_back(up);
            gens.push_back(lo);
        }
    for (const auto& m : gens)
        if (mat_det(f, n, m) != f.one()) throw std::logic_error("generator not unimodular");
    mat_group g = matrix_group(f, n, false,
                               "SL(" + std::to_string(n) + "," + std::to_string(q) + ")", gens);
    if (g.order() != (i64)sl_order(n, q)) throw std::logic_error("wrong group order");
    return g;
}

mat_group su_group(i64 n, i64 q) {
    i64 p;
    int s;
    if (n < 2 || !prime_power_decompose(q, p, s))
        throw std::invalid_argument("bad matrix group descriptor");
    check_scale(su_order(n, q));
    const fq_field& f = fq_field::get(p, 2 * s);
    std::vector<fq_mat> gens;

    std::vector<fq_elt> basis;  // F_p basis of F_{q^2}
    for (i64 t = 0; t < 2 * s; t++) {
        fq_elt b = f.zero();
        b[t] = 1;
        basis.push_back(b);
    }

    std::vector<fq_elt> trace_zero;  // F_p basis of ker(x -> x + x^q)
    {
        std::set<fq_elt> span{f.zero()};
        for (i64 t = 0; t < f.q - 1 && (i64)trace_zero.size() < s; t++) {
            fq_elt x = f.pow_table[t];
            if (!f.is_zero(f.add(x, f.pow(x, q)))) continue;
            if (span.count(x)) continue;
            trace_zero.push_back(x);
            std::set<fq_elt> grown = span;
            for (const auto& v : span) {
                fq_elt w = v;
                for (i64 c = 1; c < p; c++) {
                    w = f.add(w, x);
                    grown.insert(w);
                }
            }
            span = grown;
        }
        if ((i64)trace_zero.size() != s) throw std::logic_error("trace kernel basis failed");
    }

    auto norm_partner = [&](const fq_elt& a) {
        // least b in the power table order with b + b^q = -a^{q+1}
        fq_elt target = f.neg(f.mul(f.pow(a, q), a));
        for (i64 t = -1; t < f.q - 1; t++) {
            fq_elt b = t < 0 ? f.zero() : f.pow_table[t];
            if (f.add(b, f.pow(b, q)) == target) return b;
        }
        throw std::logic_error("hermitian norm equation unsolved");
    };

    for (i64 j = 1; j + 1 <= n; j++) {
        i64 mj = n - j;  // mirrored slot
        if (j > mj) continue;
        if (j == mj) {
            // self paired middle slot, n even
            for (const auto& a : trace_zero) {
                fq_mat up = identity_mat(f, n), lo = identity_mat(f, n);
                up[(j - 1) * n + j] = a;
                lo[j * n + (j - 1)] = a;
                gens.push_back(up);
                gens.push_back(lo);
            }
        } else if (mj == j + 1) {
            // adjacent mirrored pair, n odd
            for (const auto& a : basis) {
                fq_elt b = norm_partner(a);
                fq_mat up = identity_mat(f, n), lo = identity_mat(f, n);
                up[(j - 1) * n + j] = a;
                up[j * n + (j + 1)] = f.neg(f.pow(a, q));
                up[(j - 1) * n + (j + 1)] = b;
                lo[j * n + (j - 1)] = a;
                lo[(j + 1) * n + j] = f.neg(f.pow(a, q));
                lo[(j + 1) * n + (j - 1)] = b;
                gens.push_back(up);
                gens.push_back(lo);
            }
            for (const auto& b : trace_zero) {
                fq_mat up = identity_mat(f, n), lo = identity_mat(f, n);
                up[(j - 1) * n + (j + 1)] = b;
                lo[(j + 1) * n + (j - 1)] = b;
                gens.push_back(up);
                gens.push_back(lo);
            }
        } else {
            for (const auto& a : basis) {
                fq_mat up = identity_mat(f, n), lo = identity_mat(f, n);
                up[(j - 1) * n + j] = a;
                up[(mj - 1) * n + mj] = f.neg(f.pow(a, q));
                lo[j * n + (j - 1)] = a;
                lo[mj * n + (mj - 1)] = f.neg(f.pow(a, q));
                gens.push_back(up);
                gens.push_back(lo);
            }
        }
    }

    // every sigma-fixed unimodular diagonal: d_{n-1-i} = d_i^{-q}, free half scanned
    {
        i64 half = n / 2;
        bool odd = n % 2 == 1;
        std::vector<i64> idx(half, 0);
        while (true) {
            fq_mat d = identity_mat(f, n);
            fq_elt det = f.one();
            for (i64 i = 0; i < half; i++) {
                fq_elt a = f.pow_table[idx[i]];
                fq_elt b = f.inv(f.pow(a, q));
                d[i * n + i] = a;
                d[(n - 1 - i) * n + (n - 1 - i)] = b;
                det = f.mul(det, f.mul(a, b));
            }
            if (odd) {
                fq_elt c = f.inv(det);
                if (f.pow(c, q + 1) == f.one()) {
                    d[half * n + half] = c;
                    gens.push_back(d);
                }
            } else if (det == f.one()) {
                gens.push_back(d);
            }
            i64 pos = 0;
            while (pos < half && ++idx[pos] == f.q - 1) idx[pos++] = 0;
            if (pos == half) break;
        }
    }

    for (const auto& m : gens) {
        if (mat_det(f, n, m) != f.one()) throw std::logic_error("generator not unimodular");
        if (!unitary_wrt_antidiag(f, n, m, s)) throw std::logic_error("generator not unitary");
    }
    mat_group g = matrix_group(f, n, false,
                               "SU(" + std::to_string(n) + "," + std::to_string(q) + ")", gens);
    if (g.order() != (i64)su_order(n, q)) throw std::logic_error("wrong group order");
    return g;
}

mat_group pgl_group(i64 n, i64 q) {
    i64 p;
    int s;
    if (n < 2 || !prime_power_decompose(q, p, s))
        throw std::invalid_argument("bad matrix group descriptor");
    i64 expected = (i64)sl_order(n, q);  // |GL_n(q)| / (q-1)
    check_scale(expected);
    const fq_field& f = fq_field::get(p, s);
    std::vector<fq_mat> gens;
    for (i64 i = 0; i + 1 < n; i++)
        for (i64 t = 0; t < s; t++) {
            fq_elt b = f.zero();
            b[t] = 1;
            fq_mat up = identity_mat(f, n), lo = identity_mat(f, n);
            up[i * n + (i + 1)] = b;
            lo[(i + 1) * n + i] = b;
            gens.push_back(up);
            gens.push_back(lo);
        }
    fq_mat d = identity_mat(f, n);
    d[0] = f.gen();
    gens.push_back(d);
    mat_group g = matrix_group(f, n, true,
                               "PGL(" + std::to_string(n) + "," + std::to_string(q) + ")", gens);
    if (g.order() != expected) throw std::logic_error("wrong group order");
    return g;
}

mat_group symmetric_group(i64 n) {
    if (n < 1 || n > 8) throw std::invalid_argument("bad matrix group descriptor");
    const fq_field& f = fq_field::get(2, 1);
    if (n == 1) return matrix_group(f, 1, false, "S(1)", {});
    std::vector<i64> swp(n), cyc(n);
    for (i64 i = 0; i < n; i++) swp[i] = i;
    std::swap(swp[0], swp[1]);
    for (i64 i = 0; i < n; i++) cyc[i] = (i + 1) % n;
    mat_group g = matrix_group(f, n, false, "S(" + std::to_string(n) + ")",
                               {perm_mat(f, swp), perm_mat(f, cyc)});
    if (g.order() != factorial_i(n)) throw std::logic_error("wrong group order");
    return g;
}

mat_group alternating_group(i64 n) {
    if (n < 3 || n > 8) throw std::invalid_argument("bad matrix group descriptor");
    const fq_field& f = fq_field::get(2, 1);
    std::vector<i64> tri(n), big(n);
    for (i64 i = 0; i < n; i++) tri[i] = big[i] = i;
    tri[0] = 1, tri[1] = 2, tri[2] = 0;
    if (n % 2 == 1) {
        for (i64 i = 0; i < n; i++) big[i] = (i + 1) % n;  // full cycle, even for odd n
    } else {
        for (i64 i = 1; i < n; i++) big[i] = i == n - 1 ? 1 : i + 1;  // cycle fixing 0
    }
    mat_group g = matrix_group(f, n, false, "A(" + std::to_string(n) + ")",
                               {perm_mat(f, tri), perm_mat(f, big)});
    if (g.order() != factorial_i(n) / 2) throw std::logic_error("wrong group order");
    return g;
}

mat_group trivial_group() {
    const fq_field& f = fq_field::get(2, 1);
    return matrix_group(f, 1, false, "1", {});
}

}  // namespace typea
