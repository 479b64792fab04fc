#include "typea/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace typea {

namespace {

using json = nlohmann::ordered_json;

i64 mmul(i64 a, i64 b, i64 m) { return (i64)((__int128)a * b % m); }

i64 minv(i64 a, i64 m) { return pow_mod(mod_i(a, m), m - 2, m); }

i64 dixon_prime_for(i64 exponent, i64 group_order) {
    for (i64 l = exponent + 1;; l += exponent)
        if ((__int128)l * l > (__int128)4 * group_order && is_prime(l)) return l;
}

i64 primitive_root(i64 l) {
    std::vector<i64> pf;
    i64 m = l - 1;
    for (i64 d = 2; d * d <= m; d++)
        if (m % d == 0) {
            pf.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) pf.push_back(m);
    for (i64 w = 2; w < l; w++) {
        bool ok = true;
        for (i64 d : pf)
            if (pow_mod(w, (l - 1) / d, l) == 1) { ok = false; break; }
        if (ok) return w;
    }
    throw std::logic_error("no primitive root");
}

using fl_vec = std::vector<i64>;
using fl_mat = std::vector<fl_vec>;

/* reduced row echelon form; returns pivot columns */
std::vector<i64> rref(fl_mat& rows, i64 l) {
    std::vector<i64> pivots;
    size_t r = 0;
    i64 cols = rows.empty() ? 0 : (i64)rows[0].size();
    for (i64 c = 0; c < cols && r < rows.size(); c++) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) piv++;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        i64 iv = minv(rows[r][c], l);
        for (i64 j = 0; j < cols; j++) rows[r][j] = mmul(rows[r][j], iv, l);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k == r || rows[k][c] == 0) continue;
            i64 f = rows[k][c];
            for (i64 j = 0; j < cols; j++)
                rows[k][j] = mod_i(rows[k][j] - mmul(f, rows[r][j], l), l);
        }
        pivots.push_back(c);
        r++;
    }
    rows.resize(r);
    return pivots;
}

i64 det_mod(fl_mat a, i64 l) {
    i64 n = (i64)a.size(), det = 1;
    for (i64 c = 0; c < n; c++) {
        i64 piv = -1;
        for (i64 r = c; r < n; r++)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = l - det;
        }
        det = mmul(det, a[c][c], l);
        i64 iv = minv(a[c][c], l);
        for (i64 r = c + 1; r < n; r++) {
            if (a[r][c] == 0) continue;
            i64 f = mmul(a[r][c], iv, l);
            for (i64 j = c; j < n; j++) a[r][j] = mod_i(a[r][j] - mmul(f, a[c][j], l), l);
        }
    }
    return det % l;
}

/* canonical kernel basis of (a - lambda), free columns ascending */
fl_mat eigen_kernel(const fl_mat& a, i64 lambda, i64 l) {
    i64 n = (i64)a.size();
    fl_mat w = a;
    for (i64 i = 0; i < n; i++) w[i][i] = mod_i(w[i][i] - lambda, l);
    std::vector<i64> pivots = rref(w, l);
    std::vector<bool> is_piv(n, false);
    for (i64 c : pivots) is_piv[c] = true;
    fl_mat kernel;
    for (i64 fc = 0; fc < n; fc++) {
        if (is_piv[fc]) continue;
        fl_vec v(n, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); r++) v[pivots[r]] = mod_i(-w[r][fc], l);
        kernel.push_back(v);
    }
    return kernel;
}

struct subspace {
    fl_mat rows;
    std::vector<i64> pivots;
};

}  // namespace

oracle_table dixon_table(const mat_group& g) {
    oracle_table t;
    i64 k = g.class_count();
    t.group_order = g.order();
    t.reps = g.class_rep;
    t.sizes.resize(k);
    t.rep_orders.resize(k);
    t.inv_class.resize(k);
    for (i64 c = 0; c < k; c++) {
        t.sizes[c] = (i64)g.classes[c].size();
        t.rep_orders[c] = g.element_order(g.class_rep[c]);
        t.inv_class[c] = g.class_of[g.inv_of[g.class_rep[c]]];
    }
    t.exponent = 1;
    for (i64 c = 0; c < k; c++) t.exponent = std::lcm(t.exponent, t.rep_orders[c]);
    i64 l = t.dixon_prime = dixon_prime_for(t.exponent, t.group_order);
    if (k >= l) throw std::logic_error("class count too large for the working prime");

    // power map on classes
    std::vector<std::vector<int>> pm(k);
    for (i64 c = 0; c < k; c++) {
        pm[c].resize(t.rep_orders[c]);
        int x = 0;
        for (i64 r = 0; r < t.rep_orders[c]; r++) {
            pm[c][r] = g.class_of[x];
            x = g.mul(x, t.reps[c]);
        }
    }

    // class algebra constants mod l: m[i][j][tt] = #{x in C_i : class(x^{-1} z_tt) = j}
    std::vector<fl_mat> m(k, fl_mat(k, fl_vec(k, 0)));
    for (i64 tt = 0; tt < k; tt++) {
        int zt = t.reps[tt];
        for (int x = 0; x < (int)g.order(); x++) {
            int i = g.class_of[x];
            int j = g.class_of[g.mul(g.inv_of[x], zt)];
            m[i][j][tt] = (m[i][j][tt] + 1) % l;
        }
    }

    // split the joint eigenspaces of the commuting class matrices
    std::vector<subspace> spaces;
    {
        subspace full;
        full.rows.assign(k, fl_vec(k, 0));
        for (i64 i = 0; i < k; i++) full.rows[i][i] = 1;
        full.pivots = rref(full.rows, l);
        spaces.push_back(full);
    }
    for (i64 op = 1; op < k; op++) {
        std::vector<subspace> next;
        for (auto& sp : spaces) {
            i64 d = (i64)sp.rows.size();
            if (d == 1) {
                next.push_back(sp);
                continue;
            }
            // restriction of m[op] in the subspace coordinates
            fl_mat a(d, fl_vec(d, 0));
            for (i64 c = 0; c < d; c++) {
                fl_vec w(k, 0);
                for (i64 j = 0; j < k; j++) {
                    i64 acc = 0;
                    for (i64 tt = 0; tt < k; tt++)
                        acc = (acc + mmul(m[op][j][tt], sp.rows[c][tt], l)) % l;
                    w[j] = acc;
                }
                for (i64 r = 0; r < d; r++) a[r][c] = w[sp.pivots[r]];
                fl_vec chk(k, 0);
                for (i64 r = 0; r < d; r++)
                    for (i64 j = 0; j < k; j++)
                        chk[j] = (chk[j] + mmul(a[r][c], sp.rows[r][j], l)) % l;
                if (chk != w) throw std::logic_error("subspace not invariant");
            }
            i64 split_total = 0;
            for (i64 lam = 0; lam < l; lam++) {
                fl_mat shifted = a;
                for (i64 i = 0; i < d; i++) shifted[i][i] = mod_i(shifted[i][i] - lam, l);
                if (det_mod(shifted, l) != 0) continue;
                fl_mat kern = eigen_kernel(a, lam, l);
                subspace ns;
                for (const auto& kv : kern) {
                    fl_vec w(k, 0);
                    for (i64 c = 0; c < d; c++)
                        for (i64 j = 0; j < k; j++)
                            w[j] = (w[j] + mmul(kv[c], sp.rows[c][j], l)) % l;
                    ns.rows.push_back(w);
                }
                split_total += (i64)ns.rows.size();
                ns.pivots = rref(ns.rows, l);
                next.push_back(ns);
            }
            if (split_total != d) throw std::logic_error("class matrix not semisimple");
        }
        spaces = next;
    }
    if ((i64)spaces.size() != k) throw std::logic_error("eigenspace count mismatch");

    // normalized central character vectors, then degrees and mod-l rows
    struct mod_row {
        i64 deg;
        fl_vec vals;
    };
    std::vector<mod_row> mrows;
    for (const auto& sp : spaces) {
        if (sp.rows.size() != 1 || sp.rows[0][0] != 1)
            throw std::logic_error("bad joint eigenvector");
        const fl_vec& omega = sp.rows[0];
        i64 s = 0;
        for (i64 i = 0; i < k; i++)
            s = (s + mmul(mmul(omega[i], omega[t.inv_class[i]], l), minv(t.sizes[i] % l, l), l)) % l;
        if (s == 0) throw std::logic_error("degenerate norm sum");
        i64 d2 = mmul(t.group_order % l, minv(s, l), l);
        i64 deg = 0;
        for (i64 d = 1; (__int128)d * d <= t.group_order; d++)
            if (mmul(d, d, l) == d2) { deg = d; break; }
        if (deg == 0) throw std::logic_error("degree not recovered");
        mod_row row;
        row.deg = deg;
        row.vals.resize(k);
        for (i64 i = 0; i < k; i++)
            row.vals[i] = mmul(mmul(deg, omega[i], l), minv(t.sizes[i] % l, l), l);
        mrows.push_back(row);
    }
    std::sort(mrows.begin(), mrows.end(), [](const mod_row& a, const mod_row& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.vals < b.vals;
    });

    i64 sum_sq = 0;
    for (const auto& r : mrows) sum_sq += r.deg * r.deg;
    if (sum_sq != t.group_order) throw std::logic_error("degree squares do not sum to the order");

    // lift through the power map: multiplicities of each eigenvalue of rho(g)
    i64 w = primitive_root(l);
    i64 big_t = pow_mod(w, (l - 1) / t.exponent, l);
    t.degrees.resize(k);
    t.rows.assign(k, std::vector<cyclotomic>(k));
    for (i64 a = 0; a < k; a++) {
        t.degrees[a] = mrows[a].deg;
        for (i64 i = 0; i < k; i++) {
            i64 o = t.rep_orders[i];
            i64 to = pow_mod(big_t, t.exponent / o, l);
            std::vector<i64> topow(o);
            topow[0] = 1;
            for (i64 r = 1; r < o; r++) topow[r] = mmul(topow[r - 1], to, l);
            i64 oinv = minv(o % l, l);
            cyclotomic val = cyclotomic::zero();
            i64 total = 0;
            for (i64 j = 0; j < o; j++) {
                i64 acc = 0;
                for (i64 r = 0; r < o; r++)
                    acc = (acc + mmul(mrows[a].vals[pm[i][r]], topow[(o - j * r % o) % o], l)) % l;
                i64 mj = mmul(oinv, acc, l);
                if (mj > mrows[a].deg) throw std::logic_error("multiplicity lift failed");
                total += mj;
                if (mj > 0) val = val + cyclotomic::root_of_unity(o, j) * mpq_class(mj);
            }
            if (total != mrows[a].deg) throw std::logic_error("multiplicity lift failed");
            t.rows[a][i] = val;
        }
        if (t.rows[a][0] != cyclotomic::from_rational(t.degrees[a]))
            throw std::logic_error("degree column mismatch");
    }

    if (!row_orthogonality(t) || !column_orthogonality(t))
        throw std::logic_error("orthogonality failed");

    for (i64 c = 0; c < k; c++)
        if (t.sizes[c] == 1) t.central.push_back((int)c);
    t.central_tags.assign(k, {});
    for (i64 a = 0; a < k; a++)
        for (int c : t.central)
            t.central_tags[a].push_back(t.rows[a][c].divided_by(mpq_class(t.degrees[a])));
    return t;
}

bool row_orthogonality(const oracle_table& t) {
    i64 k = (i64)t.rows.size();
    for (i64 a = 0; a < k; a++)
        for (i64 b = a; b < k; b++) {
            cyclotomic acc = cyclotomic::zero();
            for (i64 i = 0; i < k; i++)
                acc = acc + t.rows[a][i] * t.rows[b][i].conj() * mpq_class(t.sizes[i]);
            cyclotomic want = a == b ? cyclotomic::from_rational(t.group_order) : cyclotomic::zero();
            if (acc != want) return false;
        }
    return true;
}

bool column_orthogonality(const oracle_table& t) {
    i64 k = (i64)t.rows.size();
    for (i64 i = 0; i < k; i++)
        for (i64 j = i; j < k; j++) {
            cyclotomic acc = cyclotomic::zero();
            for (i64 a = 0; a < k; a++) acc = acc + t.rows[a][i] * t.rows[a][j].conj();
            cyclotomic want = i == j ? cyclotomic::from_rational(mpq_class(t.group_order, t.sizes[i]))
                                     : cyclotomic::zero();
            if (acc != want) return false;
        }
    return true;
}

gg_report gelfand_graev_oracle(i64 n, i64 q, bool twisted) {
    gg_report rep;
    rep.group = twisted ? su_group(n, q) : sl_group(n, q);
    rep.table = dixon_table(rep.group);
    const mat_group& g = rep.group;
    const fq_field& f = *g.field;
    i64 p = f.p;
    i64 k = g.class_count();

    auto superdiag_zero = [&](int e) {
        for (i64 i = 0; i + 1 < n; i++)
            if (!f.is_zero(g.entry(e, i, i + 1))) return false;
        return true;
    };
    for (int e = 0; e < (int)g.order(); e++) {
        if (!g.is_unitriangular(e)) continue;
        rep.u0.push_back(e);
        if (superdiag_zero(e)) rep.u1.push_back(e);
    }
    std::map<int, int> upos;
    for (size_t i = 0; i < rep.u0.size(); i++) upos[rep.u0[i]] = (int)i;
    i64 nu = (i64)rep.u0.size();

    // F_p coordinates on U0/U1 through the superdiagonal
    i64 width = (n - 1) * f.s;
    fl_mat sd(nu, fl_vec(width));
    for (i64 u = 0; u < nu; u++)
        for (i64 i = 0; i + 1 < n; i++) {
            const fq_elt& e = g.entry(rep.u0[u], i, i + 1);
            for (i64 c = 0; c < f.s; c++) sd[u][i * f.s + c] = e[c];
        }
    fl_mat basis = sd;
    std::vector<i64> pivots = rref(basis, p);
    i64 mdim = (i64)basis.size();
    i64 quot = 1;
    for (i64 i = 0; i < mdim; i++) quot *= p;
    if (quot * (i64)rep.u1.size() != nu) throw std::logic_error("abelianization size mismatch");
    fl_mat coords(nu, fl_vec(mdim));
    for (i64 u = 0; u < nu; u++) {
        for (i64 r = 0; r < mdim; r++) coords[u][r] = sd[u][pivots[r]];
        fl_vec chk(width, 0);
        for (i64 r = 0; r < mdim; r++)
            for (i64 j = 0; j < width; j++)
                chk[j] = (chk[j] + coords[u][r] * basis[r][j]) % p;
        if (chk != sd[u]) throw std::logic_error("superdiagonal outside the span");
    }

    // simple slot orbits under the field twist
    std::vector<std::vector<i64>> orbits;
    {
        std::vector<bool> seen(n - 1, false);
        for (i64 j = 0; j + 1 < n; j++) {
            if (seen[j]) continue;
            i64 mj = twisted ? n - 2 - j : j;
            seen[j] = true;
            std::vector<i64> o{j};
            if (mj != j) {
                seen[mj] = true;
                o.push_back(mj);
            }
            orbits.push_back(o);
        }
    }
    // positions supported on one slot orbit modulo U1
    std::vector<std::vector<i64>> orbit_members(orbits.size());
    for (size_t oi = 0; oi < orbits.size(); oi++)
        for (i64 u = 0; u < nu; u++) {
            bool ok = true;
            for (i64 j = 0; j + 1 < n && ok; j++) {
                if (std::find(orbits[oi].begin(), orbits[oi].end(), j) != orbits[oi].end()) continue;
                if (!f.is_zero(g.entry(rep.u0[u], j, j + 1))) ok = false;
            }
            if (ok) orbit_members[oi].push_back(u);
        }

    // all linear characters of U0^F trivial on U1^F, as zeta_p exponent vectors
    std::vector<fl_vec> regular;
    {
        fl_vec wv(mdim, 0);
        while (true) {
            fl_vec exps(nu);
            for (i64 u = 0; u < nu; u++) {
                i64 acc = 0;
                for (i64 r = 0; r < mdim; r++) acc = (acc + wv[r] * coords[u][r]) % p;
                exps[u] = acc;
            }
            bool reg = true;
            for (size_t oi = 0; oi < orbits.size() && reg; oi++) {
                bool nontrivial = false;
                for (i64 u : orbit_members[oi])
                    if (exps[u] != 0) { nontrivial = true; break; }
                if (!nontrivial) reg = false;
            }
            if (reg) regular.push_back(exps);
            i64 pos = mdim - 1;
            while (pos >= 0 && ++wv[pos] == p) wv[pos--] = 0;
            if (pos < 0) break;
        }
    }
    rep.regular_count = (i64)regular.size();
    if (rep.regular_count == 0) throw std::logic_error("no regular character");

    // torus orbits
    std::vector<std::vector<int>> perms;
    for (int e = 0; e < (int)g.order(); e++) {
        if (!g.is_diagonal(e)) continue;
        std::vector<int> perm(nu);
        for (i64 u = 0; u < nu; u++) {
            int y = g.mul(g.mul(e, rep.u0[u]), g.inv_of[e]);
            auto it = upos.find(y);
            if (it == upos.end()) throw std::logic_error("torus does not normalize U0");
            perm[u] = it->second;
        }
        perms.push_back(perm);
    }
    std::map<fl_vec, bool> is_regular;
    for (const auto& v : regular) is_regular[v] = true;
    std::map<fl_vec, std::vector<fl_vec>> orbit_of;  // canonical rep -> members
    for (const auto& v : regular) {
        fl_vec best;
        std::vector<fl_vec> members;
        for (const auto& perm : perms) {
            fl_vec w(nu);
            for (i64 u = 0; u < nu; u++) w[u] = v[perm[u]];
            if (!is_regular.count(w)) throw std::logic_error("torus action leaves the regular set");
            if (best.empty() || w < best) best = w;
            members.push_back(w);
        }
        orbit_of[best] = members;
    }
    for (const auto& [repv, members] : orbit_of) {
        std::map<fl_vec, bool> distinct;
        for (const auto& w : members) distinct[w] = true;
        if ((i64)orbit_of.size() * (i64)distinct.size() != rep.regular_count)
            throw std::logic_error("torus orbits of unequal size");
    }

    // induced character values: counts of x z x^{-1} landing at each u
    std::vector<std::vector<i64>> land(k, std::vector<i64>(nu, 0));
    for (int x = 0; x < (int)g.order(); x++) {
        int xi = g.inv_of[x];
        for (i64 c = 0; c < k; c++) {
            int y = g.mul(g.mul(x, rep.table.reps[c]), xi);
            auto it = upos.find(y);
            if (it != upos.end()) land[c][it->second]++;
        }
    }

    for (const auto& [psi, members] : orbit_of) {
        gg_char gamma;
        gamma.values.resize(k);
        for (i64 c = 0; c < k; c++) {
            std::vector<i64> cnt(p, 0);
            for (i64 u = 0; u < nu; u++) cnt[psi[u]] += land[c][u];
            cyclotomic acc = cyclotomic::zero();
            for (i64 j = 0; j < p; j++)
                if (cnt[j] != 0) acc = acc + cyclotomic::root_of_unity(p, j) * mpq_class(cnt[j]);
            gamma.values[c] = acc.divided_by(mpq_class(nu));
        }
        mpq_class degree_check = 0;
        for (i64 a = 0; a < k; a++) {
            cyclotomic acc = cyclotomic::zero();
            for (i64 c = 0; c < k; c++)
                acc = acc + gamma.values[c] * rep.table.rows[a][c].conj() * mpq_class(rep.table.sizes[c]);
            acc = acc.divided_by(mpq_class(rep.table.group_order));
            mpq_class mult;
            if (!acc.is_rational(&mult) || mult.get_den() != 1 || mult < 0)
                throw std::logic_error("non-integral multiplicity");
            if (mult > 0) {
                gamma.constituents.push_back({(int)a, mult.get_num().get_si()});
                degree_check += mult * rep.table.degrees[a];
            }
        }
        mpq_class gdeg;
        if (!gamma.values[0].is_rational(&gdeg) || gdeg != degree_check)
            throw std::logic_error("decomposition does not resum");
        rep.gammas.push_back(std::move(gamma));
    }

    for (i64 c = 0; c < k; c++)
        if (g.is_regular_unipotent(rep.table.reps[c])) rep.regular_unipotent_classes++;
    return rep;
}

namespace {

json cyclo_json(const cyclotomic& v) {
    json rec;
    rec["n"] = v.n;
    json coeffs = json::array();
    for (const auto& [e, c] : v.sparse()) coeffs.push_back({e, c.get_str()});
    rec["c"] = coeffs;
    return rec;
}

cyclotomic cyclo_of_json(const json& rec) {
    i64 order = rec.at("n").get<i64>();
    cyclotomic v(order);
    for (const auto& item : rec.at("c")) {
        i64 e = item.at(0).get<i64>();
        mpq_class c(item.at(1).get<std::string>());
        c.canonicalize();
        if (e < 0 || e >= (i64)v.c.size()) throw std::invalid_argument("bad cyclotomic record");
        v.c[e] = c;
    }
    return v;
}

}  // namespace

std::string table_json_text(const mat_group& g, const oracle_table& t) {
    json doc;
    doc["format"] = "oracle-table";
    doc["version"] = 1;
    json descr;
    descr["name"] = g.name;
    descr["p"] = g.field->p;
    descr["power"] = g.field->s;
    descr["dim"] = g.dim;
    descr["projective"] = g.projective;
    doc["descriptor"] = descr;
    doc["order"] = t.group_order;
    doc["exponent"] = t.exponent;
    doc["prime"] = t.dixon_prime;
    json classes = json::array();
    for (size_t c = 0; c < t.reps.size(); c++) {
        json cls;
        cls["size"] = t.sizes[c];
        cls["order"] = t.rep_orders[c];
        json mat = json::array();
        for (const auto& e : g.elements[t.reps[c]]) mat.push_back(e);
        cls["rep"] = mat;
        classes.push_back(cls);
    }
    doc["classes"] = classes;
    json chars = json::array();
    for (const auto& row : t.rows) {
        json jr = json::array();
        for (const auto& v : row) jr.push_back(cyclo_json(v));
        chars.push_back(jr);
    }
    doc["characters"] = chars;
    return doc.dump(1);
}

namespace {

oracle_table table_of_json(const json& doc, const mat_group& g) {
    if (doc.at("format") != "oracle-table" || doc.at("version") != 1)
        throw std::invalid_argument("unknown table format");
    const json& descr = doc.at("descriptor");
    if (descr.at("name") != g.name || descr.at("p") != g.field->p ||
        descr.at("power") != g.field->s || descr.at("dim") != g.dim ||
        descr.at("projective") != g.projective || doc.at("order") != g.order())
        throw std::invalid_argument("descriptor mismatch");
    i64 k = g.class_count();
    const json& classes = doc.at("classes");
    if ((i64)classes.size() != k) throw std::invalid_argument("class count mismatch");

    oracle_table t;
    t.group_order = g.order();
    t.exponent = doc.at("exponent").get<i64>();
    t.dixon_prime = doc.at("prime").get<i64>();
    t.reps = g.class_rep;
    for (i64 c = 0; c < k; c++) {
        const json& cls = classes[c];
        fq_mat m;
        for (const auto& e : cls.at("rep")) m.push_back(e.get<fq_elt>());
        if ((i64)m.size() != g.dim * g.dim) throw std::invalid_argument("bad class rep");
        if (g.lookup(m) != g.class_rep[c]) throw std::invalid_argument("class rep mismatch");
        t.sizes.push_back(cls.at("size").get<i64>());
        if (t.sizes.back() != (i64)g.classes[c].size())
            throw std::invalid_argument("class size mismatch");
        t.rep_orders.push_back(cls.at("order").get<i64>());
        if (t.rep_orders.back() != g.element_order(g.class_rep[c]))
            throw std::invalid_argument("element order mismatch");
        t.inv_class.push_back(g.class_of[g.inv_of[g.class_rep[c]]]);
    }
    i64 e = 1;
    for (i64 o : t.rep_orders) e = std::lcm(e, o);
    if (t.exponent != e || !is_prime(t.dixon_prime) || t.dixon_prime % e != 1 % e)
        throw std::invalid_argument("exponent or prime mismatch");
    const json& chars = doc.at("characters");
    if ((i64)chars.size() != k) throw std::invalid_argument("character count mismatch");
    for (const auto& jr : chars) {
        if ((i64)jr.size() != k) throw std::invalid_argument("row length mismatch");
        std::vector<cyclotomic> row;
        for (const auto& rec : jr) row.push_back(cyclo_of_json(rec));
        mpq_class deg;
        if (!row[0].is_rational(&deg) || deg.get_den() != 1 || deg <= 0)
            throw std::invalid_argument("bad degree column");
        t.degrees.push_back(deg.get_num().get_si());
        t.rows.push_back(std::move(row));
    }
    if (!std::is_sorted(t.degrees.begin(), t.degrees.end()))
        throw std::invalid_argument("rows out of order");
    i64 sum_sq = 0;
    for (i64 d : t.degrees) sum_sq += d * d;
    if (sum_sq != t.group_order || !row_orthogonality(t) || !column_orthogonality(t))
        throw std::invalid_argument("table fails orthogonality");
    for (i64 c = 0; c < k; c++)
        if (t.sizes[c] == 1) t.central.push_back((int)c);
    t.central_tags.assign(k, {});
    for (i64 a = 0; a < k; a++)
        for (int c : t.central)
            t.central_tags[a].push_back(t.rows[a][c].divided_by(mpq_class(t.degrees[a])));
    return t;
}

}  // namespace

oracle_table table_of_json_text(const std::string& text, const mat_group& g) {
    try {
        return table_of_json(json::parse(text), g);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad table text: ") + e.what());
    }
}

void save_table(const std::string& path, const mat_group& g, const oracle_table& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << table_json_text(g, t);
}

bool load_table(const std::string& path, const mat_group& g, oracle_table* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::stringstream ss;
    ss << in.rdbuf();
    *out = table_of_json_text(ss.str(), g);
    return true;
}

}  // namespace typea
