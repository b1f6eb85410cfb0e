#include "quadbraid/smith.hpp"

#include <stdexcept>

namespace quadbraid {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix matrix_product(const IntMatrix& A, const IntMatrix& B) {
    if (A.empty() || B.empty()) return {};
    std::size_t n = A.size(), k = B.size(), m = B[0].size();
    if (A[0].size() != k) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix C(n, IntVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < k; ++t) C[i][j] += A[i][t] * B[t][j];
    return C;
}

IntVec matrix_apply(const IntMatrix& A, const IntVec& x) {
    IntVec y(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != x.size()) throw std::invalid_argument("matrix apply dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    }
    return y;
}

Int determinant(const IntMatrix& A) {
    std::size_t n = A.size();
    if (n == 0) return 1;
    if (n == 1) return A[0][0];
    Int det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            IntVec row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(A[i][j]);
            minor.push_back(std::move(row));
        }
        Int term = A[0][c] * determinant(minor);
        det += (c % 2 == 0) ? term : -term;
    }
    return det;
}

namespace {

struct Worker {
    IntMatrix a, u, v;
    std::size_t rows, cols;

    explicit Worker(const IntMatrix& m) : a(m), rows(m.size()), cols(m.empty() ? 0 : m[0].size()) {
        for (const auto& r : m)
            if (r.size() != cols) throw std::invalid_argument("ragged matrix");
        u = identity_matrix(rows);
        v = identity_matrix(cols);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& r : a) std::swap(r[i], r[j]);
        for (auto& r : v) std::swap(r[i], r[j]);
    }
    void addmul_row(std::size_t dst, std::size_t src, const Int& f) {  // row_dst += f * row_src
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    }
    void addmul_col(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    }
    void negate_row(std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }

    // smallest nonzero |entry| in the submatrix starting at (t,t), row-major
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                Int mag = a[i][j] < 0 ? Int(-a[i][j]) : a[i][j];
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        std::size_t limit = rows < cols ? rows : cols;
        for (std::size_t t = 0; t < limit; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            if (a[t][t] < 0) negate_row(t);  // keep the pivot positive for floor_div
            // clear row and column t; reductions can revive entries, so loop
            while (true) {
                bool clean = true;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (a[i][t] == 0) continue;
                    Int f = floor_div(a[i][t], a[t][t]);
                    addmul_row(i, t, -f);
                    if (a[i][t] != 0) {  // remainder becomes the smaller pivot
                        swap_rows(t, i);
                        clean = false;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a[t][j] == 0) continue;
                    Int f = floor_div(a[t][j], a[t][t]);
                    addmul_col(j, t, -f);
                    if (a[t][j] != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            // divisibility: fold any non-multiple into column t and retry
            bool redo = false;
            for (std::size_t i = t + 1; i < rows && !redo; ++i)
                for (std::size_t j = t + 1; j < cols && !redo; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        addmul_col(t, j, 1);
                        redo = true;
                    }
            if (redo) --t;  // rerun the elimination at the same position
        }
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& A) {
    Worker w(A);
    if (w.rows > 0 && w.cols > 0) w.run();
    SmithResult r;
    r.U = std::move(w.u);
    r.D = std::move(w.a);
    r.V = std::move(w.v);
    r.diag_count = w.rows < w.cols ? w.rows : w.cols;
    return r;
}

}  // namespace quadbraid
