#include "typea/intmat.hpp"

#include <stdexcept>

namespace typea {

int_matrix int_matrix::identity(int k) {
    int_matrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

int_matrix int_matrix::mul(const int_matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("int_matrix::mul: shape mismatch");
    int_matrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

int_matrix int_matrix::transpose() const {
    int_matrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

struct snf_worker {
    int_matrix s, u, v, ui, vi;

    explicit snf_worker(const int_matrix& m)
        : s(m),
          u(int_matrix::identity(m.rows)),
          v(int_matrix::identity(m.cols)),
          ui(int_matrix::identity(m.rows)),
          vi(int_matrix::identity(m.cols)) {}

    /* row_i -= q*row_j on s,u; inverse op recorded on ui columns */
    void row_sub(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int c = 0; c < s.cols; ++c) s.at(i, c) -= q * s.at(j, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
        for (int r = 0; r < ui.rows; ++r) ui.at(r, j) += q * ui.at(r, i);
    }
    void col_sub(int i, int j, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < s.rows; ++r) s.at(r, i) -= q * s.at(r, j);
        for (int r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
        for (int c = 0; c < vi.cols; ++c) vi.at(j, c) += q * vi.at(i, c);
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < s.cols; ++c) swap(s.at(i, c), s.at(j, c));
        for (int c = 0; c < u.cols; ++c) swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < ui.rows; ++r) swap(ui.at(r, i), ui.at(r, j));
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < s.rows; ++r) swap(s.at(r, i), s.at(r, j));
        for (int r = 0; r < v.rows; ++r) swap(v.at(r, i), v.at(r, j));
        for (int c = 0; c < vi.cols; ++c) swap(vi.at(i, c), vi.at(j, c));
    }
    void row_negate(int i) {
        for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        for (int r = 0; r < ui.rows; ++r) ui.at(r, i) = -ui.at(r, i);
    }

    bool find_pivot(int t, int& pi, int& pj) {
        bool found = false;
        mpz_class best;
        for (int i = t; i < s.rows; ++i)
            for (int j = t; j < s.cols; ++j) {
                if (s.at(i, j) == 0) continue;
                mpz_class a = abs(s.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        int t = 0;
        int lim = s.rows < s.cols ? s.rows : s.cols;
        while (t < lim) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            row_swap(t, pi);
            col_swap(t, pj);
            bool dirty = false;
            for (int i = t + 1; i < s.rows; ++i) {
                if (s.at(i, t) == 0) continue;
                mpz_class q = s.at(i, t) / s.at(t, t);
                row_sub(i, t, q);
                if (s.at(i, t) != 0) dirty = true;
            }
            if (dirty) continue;
            for (int j = t + 1; j < s.cols; ++j) {
                if (s.at(t, j) == 0) continue;
                mpz_class q = s.at(t, j) / s.at(t, t);
                col_sub(j, t, q);
                if (s.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            /* pivot must divide the whole remaining block for the chain d_t | d_{t+1} */
            bool divides_all = true;
            for (int i = t + 1; i < s.rows && divides_all; ++i)
                for (int j = t + 1; j < s.cols && divides_all; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        row_sub(t, i, mpz_class(-1));
                        divides_all = false;
                    }
            if (!divides_all) continue;
            ++t;
        }
        for (int i = 0; i < lim; ++i)
            if (s.at(i, i) < 0) row_negate(i);
    }
};

}  // namespace

snf_result smith_normal_form(const int_matrix& m) {
    snf_worker w(m);
    w.run();
    return {w.s, w.u, w.v, w.ui, w.vi};
}

mpz_class determinant(const int_matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
    int n = m.rows;
    if (n == 0) return 1;
    /* Bareiss fraction-free elimination */
    int_matrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_class q = num / prev;
                a.at(i, j) = q;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

}  // namespace typea
