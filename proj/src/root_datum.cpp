#include "typea/root_datum.hpp"

#include <algorithm>
#include <stdexcept>

namespace typea {

namespace {

std::vector<i64> cartan_column(i64 r, i64 j) {
    std::vector<i64> c(r, 0);
    c[j - 1] = 2;
    if (j > 1) c[j - 2] = -1;
    if (j < r) c[j] = -1;
    return c;
}

void check_label_set(const root_datum& datum, const levi_label& I) {
    for (size_t k = 0; k < I.size(); ++k) {
        if (k > 0 && I[k] <= I[k - 1]) throw std::invalid_argument("levi label not sorted");
        if (!std::count(datum.labels.begin(), datum.labels.end(), I[k]))
            throw std::invalid_argument("levi label outside the base");
    }
}

}  // namespace

std::pair<root_datum, frobenius_data> build_group(i64 n, i64 d, i64 q, bool twisted) {
    if (n < 2) throw std::invalid_argument("build_group: n must be at least 2");
    if (d < 1 || n % d != 0) throw std::invalid_argument("build_group: d must divide n");
    i64 p = 0;
    int s = 0;
    if (!prime_power_decompose(q, p, s)) throw std::invalid_argument("build_group: q not a prime power");

    i64 r = n - 1;
    root_datum datum;
    datum.ns = {n};
    datum.d = d;
    datum.x_basis = int_matrix((int)r, (int)r);
    if (d == 1) {
        datum.x_basis = int_matrix::identity((int)r);
    } else {
        // basis of {c | sum i*c_i = 0 mod d} inside the weight lattice
        datum.x_basis.at(0, 0) = d;
        for (i64 i = 2; i <= r; ++i) {
            datum.x_basis.at((int)i - 1, (int)i - 1) = 1;
            datum.x_basis.at((int)i - 1, 0) = -i;
        }
    }
    datum.pairing = int_matrix::identity((int)r);
    for (i64 j = 1; j <= r; ++j) {
        datum.simple_roots.push_back(x_coords(datum, cartan_column(r, j)));
        std::vector<i64> v(r, 0);
        if (j == 1 && d > 1) {
            v[0] = d;
            for (i64 i = 2; i <= r; ++i) v[i - 1] = -i;
        } else {
            v[j - 1] = 1;
        }
        datum.simple_coroots.push_back(v);
        datum.labels.push_back(j);
    }

    frobenius_data frob;
    frob.q = q;
    frob.p = p;
    frob.s = s;
    frob.twisted = {twisted};
    frob.factor_perm = {0};
    if (!twisted) {
        frob.phi0 = int_matrix::identity((int)r);
    } else {
        // -w0 sends the weight basis vector e_i to e_{r+1-i}; conjugate into
        // the stored basis (rows act, so the matrix is transposed for columns)
        int_matrix m((int)r, (int)r);
        for (i64 i = 1; i <= r; ++i) {
            std::vector<i64> amb(r, 0);
            for (i64 k = 0; k < r; ++k) {
                mpz_class b = datum.x_basis.at((int)i - 1, (int)k);
                amb[r - 1 - k] += (i64)b.get_si();
            }
            std::vector<i64> row = x_coords(datum, amb);
            for (i64 k = 0; k < r; ++k) m.at((int)k, (int)i - 1) = row[k];
        }
        frob.phi0 = m;
    }
    return {datum, frob};
}

std::vector<i64> x_coords(const root_datum& datum, const std::vector<i64>& ambient) {
    i64 r = datum.rank();
    if ((i64)ambient.size() != r) throw std::invalid_argument("x_coords: wrong length");
    if (datum.d == 1) return ambient;
    i64 f = 0;
    for (i64 i = 1; i <= r; ++i) f += i * ambient[i - 1];
    if (f % datum.d != 0) throw std::invalid_argument("x_coords: not in the lattice");
    std::vector<i64> u(r);
    u[0] = f / datum.d;
    for (i64 i = 2; i <= r; ++i) u[i - 1] = ambient[i - 1];
    return u;
}

root_datum levi_subdatum(const root_datum& datum, const levi_label& I) {
    check_label_set(datum, I);
    root_datum sub = datum;
    sub.simple_roots.clear();
    sub.simple_coroots.clear();
    sub.labels.clear();
    for (size_t k = 0; k < datum.labels.size(); ++k) {
        if (!std::count(I.begin(), I.end(), datum.labels[k])) continue;
        sub.simple_roots.push_back(datum.simple_roots[k]);
        sub.simple_coroots.push_back(datum.simple_coroots[k]);
        sub.labels.push_back(datum.labels[k]);
    }
    return sub;
}

std::pair<i64, i64> frobenius_sign(const root_datum& datum, const frobenius_data& frob) {
    i64 r = datum.rank();
    mpz_class det = determinant(frob.phi0);
    if (det != 1 && det != -1) throw std::invalid_argument("frobenius_sign: phi0 not invertible");

    // phi0 permutes the listed simple roots; eta is the sign of that permutation
    size_t m = datum.simple_roots.size();
    std::vector<i64> sigma(m);
    for (size_t k = 0; k < m; ++k) {
        std::vector<i64> img(r, 0);
        for (i64 i = 0; i < r; ++i)
            for (i64 j = 0; j < r; ++j)
                img[i] += (i64)frob.phi0.at((int)i, (int)j).get_si() * datum.simple_roots[k][j];
        size_t pos = m;
        for (size_t t = 0; t < m; ++t)
            if (datum.simple_roots[t] == img) pos = t;
        if (pos == m) throw std::invalid_argument("frobenius_sign: base not stable");
        sigma[k] = (i64)pos;
    }
    i64 eta = 1;
    std::vector<bool> seen(m, false);
    for (size_t k = 0; k < m; ++k) {
        if (seen[k]) continue;
        i64 len = 0;
        for (size_t t = k; !seen[t]; t = (size_t)sigma[t]) {
            seen[t] = true;
            ++len;
        }
        if (len % 2 == 0) eta = -eta;
    }
    return {(i64)det.get_si(), eta};
}

}  // namespace typea
