#pragma once

#include <optional>
#include <vector>

#include "covermonoid/numeric.hpp"

namespace covermonoid {

// Dense row-major integer matrix over GMP integers.
struct IntMatrix {
    long rows = 0, cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Int(0)) {}

    Int& at(long i, long j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Int& at(long i, long j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

    static IntMatrix identity(long n);
    bool operator==(const IntMatrix& other) const = default;
};

IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B);
IntMatrix transpose(const IntMatrix& A);
std::vector<Int> mat_apply(const IntMatrix& A, const std::vector<Int>& x);  // A*x

// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... | dr, di > 0.
struct SmithForm {
    IntMatrix D, U, V;
    long rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& A);

// U*A = H with U unimodular and H in row Hermite normal form: pivots positive,
// strictly right-moving, entries above a pivot reduced into [0, pivot),
// zero rows at the bottom.
struct HermiteForm {
    IntMatrix H, U;
    long rank = 0;
};
HermiteForm row_hermite_form(const IntMatrix& A);

// Canonical basis of the lattice spanned by the rows: HNF with zero rows dropped.
IntMatrix lattice_basis(const IntMatrix& rows);

// Rows span {x in Z^cols : A x = 0}; the result is saturated and in HNF.
IntMatrix kernel_lattice_basis(const IntMatrix& A);

bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v);
bool sublattice_equal(const IntMatrix& A, const IntMatrix& B);

// Index [A : B] for lattices spanned by the rows; 0 when B is not a
// finite-index sublattice of A.
Int lattice_index(const IntMatrix& A, const IntMatrix& B);

long rank_rational(const IntMatrix& A);
Int det_integer(const IntMatrix& A);

std::optional<std::vector<Rat>> solve_rational(const IntMatrix& A, const std::vector<Rat>& b);
std::optional<std::vector<Int>> solve_integer(const IntMatrix& A, const std::vector<Int>& b);

// A^{-1} for square nonsingular A, as columns of rationals.
struct RatMatrix {
    long rows = 0, cols = 0;
    std::vector<Rat> data;

    RatMatrix() = default;
    RatMatrix(long r, long c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Rat(0)) {}

    Rat& at(long i, long j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(long i, long j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};
std::optional<RatMatrix> inverse_rational(const IntMatrix& A);

// Divide by the gcd of the entries so that the first nonzero entry keeps its sign.
void make_primitive(std::vector<Int>& v);

}  // namespace covermonoid
