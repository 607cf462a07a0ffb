#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "covermonoid/algebra.hpp"
#include "covermonoid/group.hpp"
#include "covermonoid/lattice.hpp"

namespace covermonoid {

// Associativity binomial x_{m,n} x_{m+n,t} - x_{n,t} x_{n+t,m} with all four
// variables canonical and each side sorted.
struct WitnessRelation {
    std::array<PairIndex, 2> lhs, rhs;
    bool operator==(const WitnessRelation&) const = default;
};

struct SmoothnessVerdict {
    bool smooth = false;
    std::optional<std::array<long, 3>> triple;  // first (m, n, t) found
    std::optional<WitnessRelation> relation;
};

// Smoothness of the whole moduli problem for M. Searches for (m, n, t) with
// m, n, t, m+n, n+t, m+n+t all nonzero and m != t, which forces a nontrivial
// binomial; the outcome is cross-checked against the closed classification
// (smooth exactly for Z/2, Z/3 and (Z/2)^2).
SmoothnessVerdict smoothness_verdict(const FiniteAbelianGroup& M);

// First quadruple (m, n, t, a) in lexicographic index order with
//   (1) m, n, t distinct and nonzero;
//   (2) a outside {0, m, n, t, m-n, n-m, n-t, t-n, m-t, 2m-t, 2n-t,
//       m+n-t, m+n-2t};
//   (3) 2a != m+n-t.
// Such a quadruple certifies that the moduli scheme is universally reducible.
std::optional<std::array<long, 4>> reducibility_certificate(const FiniteAbelianGroup& M);

enum class Verdict { reducible, irreducible, unknown };

struct IrreducibilityReport {
    Verdict verdict = Verdict::unknown;
    std::optional<std::array<long, 4>> certificate;
    std::string reason;
};

// reducible when a certificate exists; irreducible for the trivial group,
// Z/2, Z/3, (Z/2)^2 and Z/4; unknown for Z/5, Z/6, Z/7 and (Z/2)^3. Any
// other group must yield a certificate (asserted).
IrreducibilityReport irreducibility_report(const FiniteAbelianGroup& M);

// Whether the vanishing pattern lies in the locus generated in at most
// `level` (1 or 2) degrees. Computed twice: directly from h, and from
// realizability of the zero support by carry rays (level 1) or by subsets of
// the two-generator sequences (level 2); the two answers must agree.
bool h_locus_membership(const Ray& E, int level);
bool h_locus_membership(const CoverLattice& L, const MultiplicationTable& psi, int level);

// Simplicial fan in the dual of K: primitive ray vectors in the coordinates
// dual to k_basis(), and maximal cones as sorted ray-index lists.
struct Fan {
    long lattice_rank = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<long>> max_cones;
};

// Fan whose maximal cones are the inclusion-maximal sequences of theta. Every
// sequence must be smooth; each stored cone is checked to be unimodular and
// every pairwise intersection of cones is checked to be their common face.
Fan smooth_locus_fan(const CoverLattice& L, const std::vector<std::vector<Ray>>& theta);

// Every nonempty smooth subset of the extremal rays, up to size rank(K),
// grown incrementally (subsets of smooth sequences are smooth, so prefix
// pruning is exhaustive).
std::vector<std::vector<Ray>> smooth_sequences_from_extremal_rays(const CoverLattice& L);

}  // namespace covermonoid
