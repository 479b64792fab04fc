#include "typea/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace typea {

namespace {

i64 mod_mpz(const mpz_class& v, i64 m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    return r.get_si();
}

}  // namespace

fin_ab_group::fin_ab_group(std::vector<i64> fs) {
    for (i64 m : fs) {
        if (m < 1) throw std::invalid_argument("invariant factor must be >= 1");
        if (m == 1) continue;
        if (!factors.empty() && m % factors.back() != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
        factors.push_back(m);
    }
}

fin_ab_group fin_ab_group::cyclic(i64 m) { return fin_ab_group(std::vector<i64>{m}); }

i64 fin_ab_group::order() const {
    i64 o = 1;
    for (i64 m : factors) o *= m;
    return o;
}

bool fin_ab_group::is_valid(const ab_elt& e) const {
    if (e.size() != factors.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 || e[i] >= factors[i]) return false;
    return true;
}

ab_elt fin_ab_group::reduce(ab_elt e) const {
    if (e.size() != factors.size()) throw std::invalid_argument("element rank mismatch");
    for (size_t i = 0; i < e.size(); ++i) e[i] = mod_i(e[i], factors[i]);
    return e;
}

ab_elt fin_ab_group::add(const ab_elt& a, const ab_elt& b) const {
    if (!is_valid(a) || !is_valid(b)) throw std::invalid_argument("element not in group");
    ab_elt r(factors.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = mod_i(a[i] + b[i], factors[i]);
    return r;
}

ab_elt fin_ab_group::neg(const ab_elt& a) const {
    if (!is_valid(a)) throw std::invalid_argument("element not in group");
    ab_elt r(factors.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = mod_i(-a[i], factors[i]);
    return r;
}

ab_elt fin_ab_group::scale(i64 k, const ab_elt& a) const {
    if (!is_valid(a)) throw std::invalid_argument("element not in group");
    ab_elt r(factors.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = mod_i(mod_i(k, factors[i]) * a[i], factors[i]);
    return r;
}

bool fin_ab_group::is_zero_elt(const ab_elt& a) const {
    if (!is_valid(a)) throw std::invalid_argument("element not in group");
    for (i64 x : a)
        if (x != 0) return false;
    return true;
}

i64 fin_ab_group::element_order(const ab_elt& a) const {
    if (!is_valid(a)) throw std::invalid_argument("element not in group");
    i64 o = 1;
    for (size_t i = 0; i < a.size(); ++i) o = lcm_i(o, factors[i] / gcd_i(factors[i], a[i]));
    return o;
}

std::vector<ab_elt> fin_ab_group::elements() const {
    if (order() > 2000000) throw std::invalid_argument("group too large to enumerate");
    std::vector<ab_elt> out;
    out.reserve((size_t)order());
    ab_elt cur = zero();
    while (true) {
        out.push_back(cur);
        size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (++cur[i] < factors[i]) break;
            cur[i] = 0;
        }
        if (i == cur.size()) break;
    }
    if (factors.empty()) out.assign(1, ab_elt{});
    return out;
}

std::string fin_ab_group::text() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << factors[i];
    }
    return os.str();
}

ab_hom::ab_hom(fin_ab_group s, fin_ab_group d, int_matrix m)
    : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
    if (mat.rows != dst.rank() || mat.cols != src.rank())
        throw std::invalid_argument("hom matrix has wrong shape");
    for (size_t i = 0; i < mat.rows; ++i)
        for (size_t j = 0; j < mat.cols; ++j)
            if ((mat.at(i, j) * src.factors[j]) % dst.factors[i] != 0)
                throw std::invalid_argument("hom matrix does not respect orders");
}

ab_hom ab_hom::identity(const fin_ab_group& g) {
    return ab_hom(g, g, int_matrix::identity(g.rank()));
}

ab_hom ab_hom::scalar(const fin_ab_group& g, i64 k) {
    int_matrix m(g.rank(), g.rank());
    for (size_t i = 0; i < g.rank(); ++i) m.at(i, i) = k;
    return ab_hom(g, g, m);
}

ab_hom ab_hom::from_images(const fin_ab_group& s, const fin_ab_group& d,
                           const std::vector<ab_elt>& images) {
    if (images.size() != s.rank()) throw std::invalid_argument("one image per generator required");
    int_matrix m(d.rank(), s.rank());
    for (size_t j = 0; j < images.size(); ++j) {
        if (!d.is_valid(images[j])) throw std::invalid_argument("image not in target group");
        for (size_t i = 0; i < d.rank(); ++i) m.at(i, j) = images[j][i];
    }
    return ab_hom(s, d, m);
}

ab_elt ab_hom::apply(const ab_elt& e) const {
    if (!src.is_valid(e)) throw std::invalid_argument("element not in source group");
    ab_elt r(dst.rank());
    for (size_t i = 0; i < dst.rank(); ++i) {
        mpz_class acc = 0;
        for (size_t j = 0; j < src.rank(); ++j) acc += mat.at(i, j) * e[j];
        r[i] = mod_mpz(acc, dst.factors[i]);
    }
    return r;
}

ab_hom ab_hom::compose(const ab_hom& inner) const {
    if (inner.dst != src) throw std::invalid_argument("hom composition mismatch");
    return ab_hom(inner.src, dst, mat.mul(inner.mat));
}

ab_hom ab_hom::minus_identity() const {
    if (src != dst) throw std::invalid_argument("minus_identity needs an endomorphism");
    int_matrix m = mat;
    for (size_t i = 0; i < m.rows; ++i) m.at(i, i) -= 1;
    return ab_hom(src, dst, m);
}

namespace {

// columns of V spanning the integer null lattice of b, via u*b*v = s
std::vector<std::vector<mpz_class>> null_lattice_columns(const int_matrix& b) {
    snf_result sn = smith_normal_form(b);
    size_t rank = 0;
    size_t dmax = std::min(sn.s.rows, sn.s.cols);
    for (size_t i = 0; i < dmax; ++i)
        if (sn.s.at(i, i) != 0) ++rank;
    std::vector<std::vector<mpz_class>> cols;
    for (size_t j = rank; j < b.cols; ++j) {
        std::vector<mpz_class> col(b.cols);
        for (size_t i = 0; i < b.cols; ++i) col[i] = sn.v.at(i, j);
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

subgroup_data subgroup_generated(const fin_ab_group& g, const std::vector<ab_elt>& elts) {
    size_t t = g.rank(), r = elts.size();
    int_matrix b(t, r);
    for (size_t j = 0; j < r; ++j) {
        if (!g.is_valid(elts[j])) throw std::invalid_argument("generator not in group");
        for (size_t i = 0; i < t; ++i) b.at(i, j) = elts[j][i];
    }
    // relation lattice: x in Z^r with b*x in diag(factors)*Z^t
    int_matrix aug(t, r + t);
    for (size_t i = 0; i < t; ++i) {
        for (size_t j = 0; j < r; ++j) aug.at(i, j) = b.at(i, j);
        aug.at(i, r + i) = g.factors[i];
    }
    auto null_cols = null_lattice_columns(aug);
    int_matrix rel(r, null_cols.size());
    for (size_t j = 0; j < null_cols.size(); ++j)
        for (size_t i = 0; i < r; ++i) rel.at(i, j) = null_cols[j][i];
    snf_result sn = smith_normal_form(rel);

    subgroup_data out;
    std::vector<i64> fs;
    std::vector<size_t> kept;
    size_t dmax = std::min(sn.s.rows, sn.s.cols);
    for (size_t i = 0; i < dmax; ++i) {
        mpz_class d = sn.s.at(i, i);
        if (d > 1) {
            fs.push_back(d.get_si());
            kept.push_back(i);
        }
    }
    out.group = fin_ab_group(fs);
    for (size_t k : kept) {
        // abstract generator e_k pulls back to column k of u^-1, then maps through b
        ab_elt img(t);
        for (size_t i = 0; i < t; ++i) {
            mpz_class acc = 0;
            for (size_t j = 0; j < r; ++j) acc += b.at(i, j) * sn.u_inv.at(j, k);
            img[i] = mod_mpz(acc, g.factors[i]);
        }
        out.gens.push_back(img);
    }
    return out;
}

ab_elt subgroup_coords(const fin_ab_group& g, const subgroup_data& sub, const ab_elt& e) {
    ab_elt target = g.reduce(e);
    for (const ab_elt& x : sub.group.elements()) {
        ab_elt img = g.zero();
        for (size_t i = 0; i < sub.gens.size(); ++i)
            img = g.add(img, g.scale(x[i], sub.gens[i]));
        if (img == target) return x;
    }
    throw std::invalid_argument("subgroup_coords: element not in subgroup");
}

hom_kernel_cokernel hom_invariants(const ab_hom& h) {
    size_t s = h.src.rank(), t = h.dst.rank();
    // cokernel: Z^t / columns of [mat | diag(dst factors)]
    int_matrix aug(t, s + t);
    for (size_t i = 0; i < t; ++i) {
        for (size_t j = 0; j < s; ++j) aug.at(i, j) = h.mat.at(i, j);
        aug.at(i, s + i) = h.dst.factors[i];
    }
    snf_result sn = smith_normal_form(aug);
    std::vector<i64> cfs;
    std::vector<size_t> kept;
    size_t dmax = std::min(sn.s.rows, sn.s.cols);
    for (size_t i = 0; i < dmax; ++i) {
        mpz_class d = sn.s.at(i, i);
        if (d > 1) {
            cfs.push_back(d.get_si());
            kept.push_back(i);
        }
    }
    fin_ab_group coker(cfs);
    int_matrix proj(kept.size(), t);
    for (size_t a = 0; a < kept.size(); ++a)
        for (size_t j = 0; j < t; ++j) proj.at(a, j) = sn.u.at(kept[a], j);
    // reduce projection entries mod the cokernel factor of their row
    for (size_t a = 0; a < kept.size(); ++a)
        for (size_t j = 0; j < t; ++j) proj.at(a, j) = mod_mpz(proj.at(a, j), cfs[a]);

    // kernel: projection of the null lattice of aug to the first s coordinates
    auto null_cols = null_lattice_columns(aug);
    std::vector<ab_elt> kgens;
    for (auto& col : null_cols) {
        ab_elt e(s);
        for (size_t i = 0; i < s; ++i) e[i] = mod_mpz(col[i], h.src.factors[i]);
        kgens.push_back(e);
    }
    subgroup_data ker = subgroup_generated(h.src, kgens);

    return hom_kernel_cokernel{
        ker.group, ab_hom::from_images(ker.group, h.src, ker.gens), coker,
        ab_hom(h.dst, coker, proj)};
}

hom_kernel_cokernel endo_h1(const ab_hom& phi) { return hom_invariants(phi.minus_identity()); }

ab_char::ab_char(fin_ab_group g, std::vector<i64> cc) : group(std::move(g)), c(std::move(cc)) {
    if (c.size() != group.rank()) throw std::invalid_argument("character tuple rank mismatch");
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_i(c[i], group.factors[i]);
}

ab_char ab_char::trivial_char(const fin_ab_group& g) {
    return ab_char(g, std::vector<i64>(g.rank(), 0));
}

cyclotomic ab_char::eval(const ab_elt& e) const {
    if (!group.is_valid(e)) throw std::invalid_argument("element not in character's group");
    i64 n = group.exponent();
    i64 acc = 0;
    for (size_t i = 0; i < c.size(); ++i)
        acc = mod_i(acc + mod_i(e[i] * c[i], n) * (n / group.factors[i]), n);
    return cyclotomic::root_of_unity(n, acc);
}

bool ab_char::in_kernel(const ab_elt& e) const {
    if (!group.is_valid(e)) throw std::invalid_argument("element not in character's group");
    i64 n = group.exponent();
    i64 acc = 0;
    for (size_t i = 0; i < c.size(); ++i)
        acc = mod_i(acc + mod_i(e[i] * c[i], n) * (n / group.factors[i]), n);
    return acc == 0;
}

bool ab_char::is_trivial() const {
    for (i64 x : c)
        if (x != 0) return false;
    return true;
}

i64 ab_char::order() const { return group.element_order(c); }

ab_char ab_char::mul(const ab_char& o) const {
    if (group != o.group) throw std::invalid_argument("characters on different groups");
    return ab_char(group, group.add(c, o.c));
}

ab_char ab_char::inverse() const { return ab_char(group, group.neg(c)); }

ab_char ab_char::power(i64 k) const { return ab_char(group, group.scale(k, c)); }

std::vector<ab_char> all_chars(const fin_ab_group& g) {
    std::vector<ab_char> out;
    for (auto& e : g.elements()) out.emplace_back(g, e);
    return out;
}

cyclotomic dual_pairing(const ab_char& chi, const ab_elt& e) { return chi.eval(e); }

}  // namespace typea
