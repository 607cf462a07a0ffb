#include "covermonoid/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace covermonoid {

IntMatrix IntMatrix::identity(long n) {
    IntMatrix I(n, n);
    for (long i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    require(A.cols == B.rows, "mat_mul: shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (long i = 0; i < A.rows; ++i)
        for (long k = 0; k < A.cols; ++k) {
            const Int& a = A.at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < B.cols; ++j) C.at(i, j) += a * B.at(k, j);
        }
    return C;
}

IntMatrix transpose(const IntMatrix& A) {
    IntMatrix T(A.cols, A.rows);
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

std::vector<Int> mat_apply(const IntMatrix& A, const std::vector<Int>& x) {
    require(static_cast<long>(x.size()) == A.cols, "mat_apply: shape mismatch");
    std::vector<Int> y(A.rows, Int(0));
    for (long i = 0; i < A.rows; ++i)
        for (long j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

namespace {

void swap_rows(IntMatrix& M, long a, long b) {
    if (a == b) return;
    for (long j = 0; j < M.cols; ++j) std::swap(M.at(a, j), M.at(b, j));
}

void swap_cols(IntMatrix& M, long a, long b) {
    if (a == b) return;
    for (long i = 0; i < M.rows; ++i) std::swap(M.at(i, a), M.at(i, b));
}

// row[a] += c * row[b]
void add_row(IntMatrix& M, long a, long b, const Int& c) {
    if (c == 0) return;
    for (long j = 0; j < M.cols; ++j) M.at(a, j) += c * M.at(b, j);
}

void add_col(IntMatrix& M, long a, long b, const Int& c) {
    if (c == 0) return;
    for (long i = 0; i < M.rows; ++i) M.at(i, a) += c * M.at(i, b);
}

void negate_row(IntMatrix& M, long a) {
    for (long j = 0; j < M.cols; ++j) M.at(a, j) = -M.at(a, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    SmithForm f;
    f.D = A;
    f.U = IntMatrix::identity(A.rows);
    f.V = IntMatrix::identity(A.cols);
    IntMatrix& D = f.D;
    const long m = A.rows, n = A.cols, steps = std::min(m, n);

    for (long t = 0; t < steps; ++t) {
        for (;;) {
            // Move a minimal-magnitude nonzero entry of the trailing block to (t,t).
            long pi = -1, pj = -1;
            Int best;
            for (long i = t; i < m; ++i)
                for (long j = t; j < n; ++j) {
                    if (D.at(i, j) == 0) continue;
                    Int mag = abs(D.at(i, j));
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;  // trailing block is zero
            swap_rows(D, t, pi);
            swap_rows(f.U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(f.V, t, pj);
            if (D.at(t, t) < 0) {
                negate_row(D, t);
                negate_row(f.U, t);
            }

            bool cleared = true;
            for (long i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = int_fdiv(D.at(i, t), D.at(t, t));
                add_row(D, i, t, -q);
                add_row(f.U, i, t, -q);
                if (D.at(i, t) != 0) cleared = false;  // remainder beats the pivot
            }
            for (long j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = int_fdiv(D.at(t, j), D.at(t, t));
                add_col(D, j, t, -q);
                add_col(f.V, j, t, -q);
                if (D.at(t, j) != 0) cleared = false;
            }
            if (!cleared) continue;

            // Divisibility pass: the pivot must divide the rest of the block.
            bool bad = false;
            for (long i = t + 1; i < m && !bad; ++i)
                for (long j = t + 1; j < n && !bad; ++j)
                    if (int_fmod(D.at(i, j), D.at(t, t)) != 0) {
                        add_row(D, t, i, Int(1));
                        add_row(f.U, t, i, Int(1));
                        bad = true;
                    }
            if (!bad) break;
        }
        ++f.rank;
    }
done:
    return f;
}

HermiteForm row_hermite_form(const IntMatrix& A) {
    HermiteForm f;
    f.H = A;
    f.U = IntMatrix::identity(A.rows);
    IntMatrix& H = f.H;
    const long m = A.rows, n = A.cols;

    long r = 0;
    for (long j = 0; j < n && r < m; ++j) {
        // Clear the column below row r, keeping a minimal positive pivot at r.
        for (;;) {
            long pi = -1;
            Int best;
            for (long i = r; i < m; ++i) {
                if (H.at(i, j) == 0) continue;
                Int mag = abs(H.at(i, j));
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                }
            }
            if (pi < 0) goto next_col;  // no pivot in this column
            swap_rows(H, r, pi);
            swap_rows(f.U, r, pi);
            if (H.at(r, j) < 0) {
                negate_row(H, r);
                negate_row(f.U, r);
            }
            bool cleared = true;
            for (long i = r + 1; i < m; ++i) {
                if (H.at(i, j) == 0) continue;
                Int q = int_fdiv(H.at(i, j), H.at(r, j));
                add_row(H, i, r, -q);
                add_row(f.U, i, r, -q);
                if (H.at(i, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        // Reduce entries above the pivot into [0, pivot).
        for (long i = 0; i < r; ++i) {
            Int q = int_fdiv(H.at(i, j), H.at(r, j));
            add_row(H, i, r, -q);
            add_row(f.U, i, r, -q);
        }
        ++r;
    next_col:;
    }
    f.rank = r;
    return f;
}

IntMatrix lattice_basis(const IntMatrix& rows) {
    HermiteForm f = row_hermite_form(rows);
    IntMatrix B(f.rank, rows.cols);
    for (long i = 0; i < f.rank; ++i)
        for (long j = 0; j < rows.cols; ++j) B.at(i, j) = f.H.at(i, j);
    return B;
}

IntMatrix kernel_lattice_basis(const IntMatrix& A) {
    SmithForm f = smith_normal_form(A);
    const long n = A.cols, k = n - f.rank;
    IntMatrix K(k, n);
    for (long t = 0; t < k; ++t)
        for (long i = 0; i < n; ++i) K.at(t, i) = f.V.at(i, f.rank + t);
    return lattice_basis(K);
}

bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v) {
    return solve_integer(transpose(basis), v).has_value();
}

bool sublattice_equal(const IntMatrix& A, const IntMatrix& B) {
    return lattice_basis(A) == lattice_basis(B);
}

Int lattice_index(const IntMatrix& A, const IntMatrix& B) {
    IntMatrix HA = lattice_basis(A), HB = lattice_basis(B);
    if (HA.rows != HB.rows) return 0;
    const long r = HA.rows;
    IntMatrix HAt = transpose(HA);
    IntMatrix X(r, r);
    for (long i = 0; i < r; ++i) {
        std::vector<Int> b(HB.cols);
        for (long j = 0; j < HB.cols; ++j) b[j] = HB.at(i, j);
        auto x = solve_integer(HAt, b);
        if (!x) return 0;  // not a sublattice
        for (long j = 0; j < r; ++j) X.at(i, j) = (*x)[j];
    }
    return abs(det_integer(X));
}

long rank_rational(const IntMatrix& A) {
    return smith_normal_form(A).rank;
}

Int det_integer(const IntMatrix& A) {
    require(A.rows == A.cols, "det_integer: square matrix required");
    const long n = A.rows;
    if (n == 0) return 1;
    IntMatrix M = A;
    int sign = 1;
    Int prev = 1;
    // Bareiss fraction-free elimination.
    for (long k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            long p = -1;
            for (long i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            swap_rows(M, k, p);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& A, const std::vector<Rat>& b) {
    require(static_cast<long>(b.size()) == A.rows, "solve_rational: shape mismatch");
    const long m = A.rows, n = A.cols;
    RatMatrix W(m, n + 1);
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < n; ++j) W.at(i, j) = Rat(A.at(i, j));
        W.at(i, n) = b[i];
    }
    std::vector<long> pivot_col;
    long r = 0;
    for (long j = 0; j < n && r < m; ++j) {
        long p = -1;
        for (long i = r; i < m; ++i)
            if (W.at(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (long jj = 0; jj <= n; ++jj) std::swap(W.at(p, jj), W.at(r, jj));
        Rat inv = W.at(r, j);
        for (long jj = j; jj <= n; ++jj) W.at(r, jj) /= inv;
        for (long i = 0; i < m; ++i) {
            if (i == r || W.at(i, j) == 0) continue;
            Rat c = W.at(i, j);
            for (long jj = j; jj <= n; ++jj) W.at(i, jj) -= c * W.at(r, jj);
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (long i = r; i < m; ++i)
        if (W.at(i, n) != 0) return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (long i = 0; i < r; ++i) x[pivot_col[i]] = W.at(i, n);
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b) {
    require(static_cast<long>(b.size()) == A.rows, "solve_integer: shape mismatch");
    SmithForm f = smith_normal_form(A);
    std::vector<Int> c = mat_apply(f.U, b);
    const long n = A.cols;
    std::vector<Int> y(n, Int(0));
    for (long i = 0; i < f.rank; ++i) {
        if (int_fmod(c[i], f.D.at(i, i)) != 0) return std::nullopt;
        mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), f.D.at(i, i).get_mpz_t());
    }
    for (long i = f.rank; i < A.rows; ++i)
        if (c[i] != 0) return std::nullopt;
    return mat_apply(f.V, y);
}

std::optional<RatMatrix> inverse_rational(const IntMatrix& A) {
    require(A.rows == A.cols, "inverse_rational: square matrix required");
    const long n = A.rows;
    RatMatrix W(n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) W.at(i, j) = Rat(A.at(i, j));
        W.at(i, n + i) = 1;
    }
    for (long j = 0; j < n; ++j) {
        long p = -1;
        for (long i = j; i < n; ++i)
            if (W.at(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) return std::nullopt;
        if (p != j)
            for (long jj = 0; jj < 2 * n; ++jj) std::swap(W.at(p, jj), W.at(j, jj));
        Rat inv = W.at(j, j);
        for (long jj = 0; jj < 2 * n; ++jj) W.at(j, jj) /= inv;
        for (long i = 0; i < n; ++i) {
            if (i == j || W.at(i, j) == 0) continue;
            Rat c = W.at(i, j);
            for (long jj = 0; jj < 2 * n; ++jj) W.at(i, jj) -= c * W.at(j, jj);
        }
    }
    RatMatrix R(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) R.at(i, j) = W.at(i, n + j);
    return R;
}

void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    if (g <= 1) return;
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace covermonoid
