#include "typea/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace typea {

namespace {

constexpr i64 max_order = 10000;

std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
    std::vector<mpz_class> r = num;
    int dn = (int)r.size() - 1, dd = (int)den.size() - 1;
    std::vector<mpz_class> q(dn - dd + 1);
    for (int i = dn; i >= dd; --i) {
        if (r[i] == 0) continue;
        mpz_class f = r[i] / den[dd];
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * den[j];
    }
    return q;
}

}  // namespace

namespace {

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

const std::vector<mpz_class>& cyclo_poly_rec(i64 n, std::map<i64, std::vector<mpz_class>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<mpz_class> num((size_t)n + 1);
    num[0] = -1;
    num[(size_t)n] = 1;
    std::vector<mpz_class> acc{1};
    for (i64 d = 1; d < n; ++d)
        if (n % d == 0) acc = poly_mul_z(acc, cyclo_poly_rec(d, cache));
    return cache.emplace(n, poly_div_exact(num, acc)).first->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(i64 n) {
    static std::map<i64, std::vector<mpz_class>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    if (n > max_order) throw std::invalid_argument("cyclotomic order exceeds 10^4");
    return cyclo_poly_rec(n, cache);
}

cyclotomic::cyclotomic(i64 order) : n(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic: order must be >= 1");
    if (order > max_order) throw std::invalid_argument("cyclotomic order exceeds 10^4");
    c.assign((size_t)euler_phi(order), 0);
    if (c.empty()) c.assign(1, 0);
}

namespace {

/* reduce a coefficient vector (degrees 0..len-1) mod Phi_n into the power basis */
std::vector<mpq_class> reduce_mod_phi(std::vector<mpq_class> v, i64 n) {
    const auto& phi = cyclotomic_polynomial(n);
    size_t deg = phi.size() - 1;
    if (deg == 0) deg = 1; /* n = 1 convention: basis {1} */
    if (n == 1) {
        mpq_class tot = 0;
        for (auto& x : v) tot += x;
        return {tot};
    }
    /* first fold exponents mod n (zeta^n = 1) */
    std::vector<mpq_class> w((size_t)n);
    for (size_t i = 0; i < v.size(); ++i) w[i % (size_t)n] += v[i];
    for (size_t i = w.size(); i-- > deg;) {
        if (w[i] == 0) continue;
        mpq_class f = w[i];
        w[i] = 0;
        for (size_t j = 0; j < deg; ++j) w[i - deg + j] -= f * mpq_class(phi[j]);
        /* leading coeff of Phi_n is 1 so nothing else moves */
    }
    w.resize(deg);
    return w;
}

}  // namespace

cyclotomic cyclotomic::from_rational(const mpq_class& r) {
    cyclotomic x(1);
    x.c[0] = r;
    return x;
}

cyclotomic cyclotomic::root_of_unity(i64 order, i64 exponent) {
    if (order < 1) throw std::invalid_argument("root_of_unity: bad order");
    exponent = mod_i(exponent, order);
    i64 g = gcd_i(exponent == 0 ? order : exponent, order);
    i64 ord = order / g, exp = exponent / g;
    cyclotomic x(ord);
    std::vector<mpq_class> v((size_t)exp + 1);
    v[(size_t)exp] = 1;
    x.c = reduce_mod_phi(v, ord);
    return x;
}

bool cyclotomic::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool cyclotomic::is_rational(mpq_class* out) const {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    if (out) *out = c[0];
    return true;
}

cyclotomic cyclotomic::promoted(i64 m) const {
    if (m == n) return *this;
    if (m % n != 0) throw std::invalid_argument("cyclotomic::promoted: order must be a multiple");
    cyclotomic r(m);
    std::vector<mpq_class> v((size_t)((c.size() - 1) * (m / n)) + 1);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) v[i * (size_t)(m / n)] = c[i];
    r.c = reduce_mod_phi(v, m);
    return r;
}

cyclotomic cyclotomic::galois(i64 k) const {
    k = mod_i(k, n);
    if (gcd_i(k, n) != 1) throw std::invalid_argument("cyclotomic::galois: k not coprime to order");
    std::vector<mpq_class> v((size_t)n);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) v[(size_t)mod_i((i64)i * k, n)] += c[i];
    cyclotomic r(n);
    r.c = reduce_mod_phi(v, n);
    return r;
}

cyclotomic cyclotomic::conj() const { return n == 1 ? *this : galois(n - 1); }

cyclotomic cyclotomic::pow(i64 k) const {
    cyclotomic r = one();
    cyclotomic b = *this;
    if (k < 0) throw std::invalid_argument("cyclotomic::pow: negative exponent");
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

cyclotomic operator+(const cyclotomic& a, const cyclotomic& b) {
    i64 m = lcm_i(a.n, b.n);
    cyclotomic x = a.promoted(m), y = b.promoted(m);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
    return x;
}

cyclotomic operator-(const cyclotomic& a, const cyclotomic& b) {
    i64 m = lcm_i(a.n, b.n);
    cyclotomic x = a.promoted(m), y = b.promoted(m);
    for (size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
    return x;
}

cyclotomic operator-(const cyclotomic& a) {
    cyclotomic x = a;
    for (auto& v : x.c) v = -v;
    return x;
}

cyclotomic operator*(const cyclotomic& a, const cyclotomic& b) {
    i64 m = lcm_i(a.n, b.n);
    cyclotomic x = a.promoted(m), y = b.promoted(m);
    std::vector<mpq_class> v(x.c.size() + y.c.size() - 1);
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == 0) continue;
        for (size_t j = 0; j < y.c.size(); ++j)
            if (y.c[j] != 0) v[i + j] += x.c[i] * y.c[j];
    }
    cyclotomic r(m);
    r.c = reduce_mod_phi(v, m);
    return r;
}

cyclotomic operator*(const cyclotomic& a, const mpq_class& r) {
    cyclotomic x = a;
    for (auto& v : x.c) v *= r;
    return x;
}

cyclotomic cyclotomic::divided_by(const mpq_class& r) const {
    if (r == 0) throw std::invalid_argument("cyclotomic: division by zero");
    cyclotomic x = *this;
    for (auto& v : x.c) v /= r;
    return x;
}

bool operator==(const cyclotomic& a, const cyclotomic& b) {
    i64 m = lcm_i(a.n, b.n);
    return a.promoted(m).c == b.promoted(m).c;
}

std::vector<std::pair<i64, mpq_class>> cyclotomic::sparse() const {
    std::vector<std::pair<i64, mpq_class>> out;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out.emplace_back((i64)i, c[i]);
    return out;
}

std::string cyclotomic::text() const {
    mpq_class r;
    if (is_rational(&r)) {
        std::ostringstream os;
        os << r;
        return os.str();
    }
    if (n % 4 == 0) {
        cyclotomic i4 = root_of_unity(4, 1);
        if (*this == i4) return "i";
        if (*this == -i4) return "-i";
    }
    for (i64 k = 1; k < n; ++k) {
        cyclotomic z = root_of_unity(n, k);
        i64 g = gcd_i(k, n);
        if (*this == z) {
            std::ostringstream os;
            os << "zeta" << n / g << "^" << k / g;
            return os.str();
        }
        if (*this == -z) {
            std::ostringstream os;
            os << "-zeta" << n / g << "^" << k / g;
            return os.str();
        }
    }
    std::ostringstream os;
    bool first = true;
    for (auto& [e, q] : sparse()) {
        if (!first) os << " + ";
        first = false;
        os << q;
        if (e > 0) os << "*zeta" << n << "^" << e;
    }
    return os.str();
}

}  // namespace typea
