#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covermonoid/algebra.hpp"
#include "covermonoid/group.hpp"
#include "covermonoid/lattice.hpp"

namespace covermonoid {

// The step sizes d_q = q*beta reduced into (0, N], and the set Omega of record
// indices (every smaller positive index has a strictly smaller step).
long d_value(long beta, long N, long q);
std::vector<long> omega_set(long beta, long N);

// Numerical invariants of the presentation (r, alpha, N) together with a
// record index qbar, plus the staircase profile and the good-pair coordinates
// writing every group element uniquely as A*m + B*n with 0 <= A < z,
// 0 <= B < f(A).
struct TwoDegreeInvariants {
    long r, alpha, N, qbar;
    long qhat, dqhat, qprime;
    long z, x, y, w, gamma;
    std::vector<long> f;                      // profile on [0, z)
    std::vector<std::pair<long, long>> good;  // element index -> (A, B)
    TwoDegreeGroup presentation;              // group with m = e1, n = e2
};
TwoDegreeInvariants invariants_for(long r, long alpha, long N, long qbar);

// The dual pair of functionals attached to (r, alpha, N, qbar); requires the
// nondegeneracy qbar*r != 1 and qbar != N. L must live on the presentation
// group of (r, alpha, N).
std::pair<Ray, Ray> lambda_delta(const CoverLattice& L, long r, long alpha, long N, long qbar);

// Identification of a degenerate Lambda or Delta with a carry ray of a cyclic
// surjection or with a Delta of smaller record index.
enum class RaySide { lambda, delta };
Ray degenerate_ray(const CoverLattice& L, long r, long alpha, long N, long qbar, RaySide which);

// Structure constants of the universal two-generator algebra attached to
// (r, alpha, N, qbar) with relation scalars a, b.
MultiplicationTable universal_multiplication(long r, long alpha, long N, long qbar,
                                             const FieldScalar& a, const FieldScalar& b);

// Recover (qbar, lambda) from a table generated in degrees {m, n} with trivial
// H; asserts the table is a rescaling of universal_multiplication(..., lambda, 0).
struct TwoDegreeClass {
    long qbar;
    FieldScalar lambda;
};
TwoDegreeClass classify_two_degree_algebra(const MultiplicationTable& psi, long m, long n);

// A presentation datum with a record index and a marking surjection.
struct SigmaDatum {
    long r, alpha, N, qbar;
    GroupHomomorphism phi;  // M -> presentation group, surjective

    bool operator==(const SigmaDatum& o) const {
        return r == o.r && alpha == o.alpha && N == o.N && qbar == o.qbar &&
               phi.images == o.phi.images;
    }
};

SigmaDatum dual_datum(const SigmaDatum& chi);

// All sigma data on M; with `bar` only the weaker exclusions qbar*r != 1 and
// qbar != N are applied.
std::vector<SigmaDatum> enumerate_sigma(const FiniteAbelianGroup& M, bool bar = false);

// Ray sequences covering the locus needing at most two generators: singleton
// carry rays of cyclic surjections plus the (Lambda, Delta) pairs of the
// relaxed sigma data, deduplicated by generator values.
std::vector<std::vector<Ray>> enumerate_theta2(const CoverLattice& L);

// Rows of the normal-crossing ray table realizable from M: a named quotient
// pattern, its parameters, the marking surjection, and the pulled-back ray.
struct NCRow {
    std::string family;  // "Z/2", "(Z/2)^2", "Z/2l x Z/2", "Z/4l", "Z/2l"
    long l;
    long r, alpha, N, qbar;
    GroupHomomorphism phi;  // M -> row group
    Ray ray;                // pulled back to L
};
std::vector<NCRow> nc_ray_table(const CoverLattice& L);

}  // namespace covermonoid
