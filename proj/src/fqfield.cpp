#include "typea/fqfield.hpp"

#include <mutex>
#include <stdexcept>

namespace typea {

namespace {

// multiply two polynomials over F_p and reduce mod the monic polynomial `poly` of degree s
fq_elt poly_mulmod(const fq_elt& a, const fq_elt& b, const std::vector<i64>& poly, i64 p) {
    i64 s = (i64)poly.size();
    std::vector<i64> prod(2 * s - 1, 0);
    for (i64 i = 0; i < s; ++i)
        for (i64 j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (i64 d = 2 * s - 2; d >= s; --d) {
        i64 c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^s = -poly (lower part)
        for (i64 i = 0; i < s; ++i) prod[d - s + i] = mod_i(prod[d - s + i] - c * poly[i], p);
    }
    prod.resize(s);
    return prod;
}

// remainder of (monic, degree s, given by low coefficients `poly`) divided by
// the monic divisor candidate `div` (low coefficients, degree d)
bool divides(const std::vector<i64>& div, const std::vector<i64>& poly, i64 p) {
    i64 s = (i64)poly.size(), d = (i64)div.size();
    std::vector<i64> rem(poly);
    rem.push_back(1);  // full dividend including leading x^s
    for (i64 k = s; k >= d; --k) {
        i64 c = rem[k];
        if (c == 0) continue;
        rem[k] = 0;
        for (i64 i = 0; i < d; ++i) rem[k - d + i] = mod_i(rem[k - d + i] - c * div[i], p);
    }
    for (i64 i = 0; i < d; ++i)
        if (rem[i] != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<i64>& poly, i64 p) {
    i64 s = (i64)poly.size();
    if (s == 1) return true;
    for (i64 d = 1; d <= s / 2; ++d) {
        i64 count = 1;
        for (i64 i = 0; i < d; ++i) count *= p;
        for (i64 code = 0; code < count; ++code) {
            std::vector<i64> div(d);
            i64 v = code;
            for (i64 i = 0; i < d; ++i) {
                div[i] = v % p;
                v /= p;
            }
            if (divides(div, poly, p)) return false;
        }
    }
    return true;
}

}  // namespace

const fq_field& fq_field::get(i64 p, i64 s) {
    static std::map<std::pair<i64, i64>, fq_field> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(p, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (s < 1 || s > 12) throw std::invalid_argument("extension degree out of range");
    i64 q = 1;
    for (i64 i = 0; i < s; ++i) {
        q *= p;
        if (q > 1000000) throw std::invalid_argument("field too large");
    }

    fq_field f;
    f.p = p;
    f.s = s;
    f.q = q;

    // lexicographically least monic irreducible whose root generates the unit group;
    // candidates ordered by their base-p digit code c_0 + c_1 p + ...
    for (i64 code = 0; code < q; ++code) {
        std::vector<i64> poly(s);
        i64 v = code;
        for (i64 i = 0; i < s; ++i) {
            poly[i] = v % p;
            v /= p;
        }
        if (!is_irreducible(poly, p)) continue;
        // root of the polynomial is the class of x; check it generates F_q^*
        fq_elt x(s, 0);
        if (s == 1)
            x[0] = mod_i(-poly[0], p);
        else
            x[1] = 1;
        if (s == 1 && x[0] == 0) continue;
        std::vector<fq_elt> table;
        table.reserve(q - 1);
        fq_elt cur(s, 0);
        cur[0] = 1;
        bool primitive = true;
        for (i64 t = 0; t < q - 1; ++t) {
            table.push_back(cur);
            cur = poly_mulmod(cur, x, poly, p);
            bool is_one = true;
            for (i64 i = 0; i < s; ++i)
                if (cur[i] != (i == 0 ? 1 : 0)) is_one = false;
            if (is_one && t + 1 < q - 1) {
                primitive = false;
                break;
            }
            if (t + 1 == q - 1 && !is_one) primitive = false;
        }
        if (!primitive) continue;
        f.poly = poly;
        f.pow_table = std::move(table);
        for (i64 t = 0; t < q - 1; ++t) f.log_table[f.pow_table[t]] = t;
        return cache.emplace(key, std::move(f)).first->second;
    }
    throw std::logic_error("no primitive polynomial found");
}

fq_elt fq_field::one() const {
    fq_elt e(s, 0);
    e[0] = 1;
    return e;
}

fq_elt fq_field::gen() const { return pow_table[q > 2 ? 1 : 0]; }

bool fq_field::is_zero(const fq_elt& a) const {
    for (i64 c : a)
        if (c != 0) return false;
    return true;
}

fq_elt fq_field::add(const fq_elt& a, const fq_elt& b) const {
    fq_elt r(s);
    for (i64 i = 0; i < s; ++i) r[i] = mod_i(a[i] + b[i], p);
    return r;
}

fq_elt fq_field::neg(const fq_elt& a) const {
    fq_elt r(s);
    for (i64 i = 0; i < s; ++i) r[i] = mod_i(-a[i], p);
    return r;
}

fq_elt fq_field::mul(const fq_elt& a, const fq_elt& b) const {
    return poly_mulmod(a, b, poly, p);
}

fq_elt fq_field::pow(const fq_elt& a, i64 k) const {
    if (is_zero(a)) {
        if (k <= 0) throw std::invalid_argument("zero to nonpositive power");
        return a;
    }
    i64 t = log(a);
    return pow_table[mod_i(t * mod_i(k, q - 1), q - 1)];
}

fq_elt fq_field::inv(const fq_elt& a) const {
    if (is_zero(a)) throw std::invalid_argument("inverse of zero");
    return pow_table[mod_i(-log(a), q - 1)];
}

fq_elt fq_field::frobenius(const fq_elt& a) const {
    if (is_zero(a)) return a;
    return pow_table[mod_i(log(a) * p, q - 1)];
}

i64 fq_field::log(const fq_elt& a) const {
    auto it = log_table.find(a);
    if (it == log_table.end()) throw std::invalid_argument("log of zero");
    return it->second;
}

i64 fq_field::trace(const fq_elt& a) const {
    fq_elt acc = a, cur = a;
    for (i64 i = 1; i < s; ++i) {
        cur = frobenius(cur);
        acc = add(acc, cur);
    }
    for (i64 i = 1; i < s; ++i)
        if (acc[i] != 0) throw std::logic_error("trace not in prime field");
    return acc[0];
}

fq_elt fq_field::rel_trace(const fq_elt& a, i64 k) const {
    if (k < 1 || s % k != 0) throw std::invalid_argument("not a subfield degree");
    fq_elt acc = a, cur = a;
    for (i64 i = 1; i < s / k; ++i) {
        for (i64 j = 0; j < k; ++j) cur = frobenius(cur);
        acc = add(acc, cur);
    }
    return acc;
}

bool fq_field::in_subfield(const fq_elt& a, i64 k) const {
    if (k < 1 || s % k != 0) throw std::invalid_argument("not a subfield degree");
    if (is_zero(a)) return true;
    i64 sub_order = 1;
    for (i64 i = 0; i < k; ++i) sub_order *= p;
    return mod_i(log(a) * (sub_order - 1), q - 1) == 0;
}

i64 fq_field::alt_generator_power() const {
    for (i64 u = 2; u < q - 1; ++u)
        if (gcd_i(u, q - 1) == 1) return u;
    return 1;
}

}  // namespace typea
