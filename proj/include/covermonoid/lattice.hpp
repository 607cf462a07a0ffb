#pragma once

#include <array>
#include <optional>
#include <vector>

#include "covermonoid/cone.hpp"
#include "covermonoid/group.hpp"
#include "covermonoid/linalg.hpp"

namespace covermonoid {

// Unordered pair of nonzero group elements in canonical form m <= n.
struct PairIndex {
    long m, n;
    bool operator==(const PairIndex&) const = default;
};

// The ambient lattice Z^(M \ 0) together with the kernel lattice K of the
// evaluation map e_m -> m and the monoid generators v_{m,n} = e_m + e_n - e_{m+n}.
// Ambient coordinate i corresponds to the nonzero element with index i+1.
class CoverLattice {
public:
    explicit CoverLattice(FiniteAbelianGroup M);

    const FiniteAbelianGroup& group() const { return M_; }
    long ambient_rank() const { return M_.size() - 1; }

    const std::vector<PairIndex>& pairs() const { return pairs_; }
    long pair_index(long m, long n) const;
    const std::vector<Int>& generator(long pair) const { return gens_[pair]; }
    const std::vector<std::vector<Int>>& generators() const { return gens_; }

    // Canonical (Hermite) row basis of K; full rank |M|-1, index |M| in the ambient.
    const IntMatrix& k_basis() const { return kbasis_; }
    // Coordinates of an ambient vector lying in K with respect to k_basis().
    std::vector<Int> k_coords(const std::vector<Int>& v) const;
    const std::vector<std::vector<Int>>& generator_k_coords() const { return gens_k_; }

private:
    FiniteAbelianGroup M_;
    std::vector<PairIndex> pairs_;
    std::vector<long> pair_lookup_;  // dense (m * |M| + n) -> pair index
    std::vector<std::vector<Int>> gens_;
    IntMatrix kbasis_, kbasis_t_;
    std::vector<std::vector<Int>> gens_k_;
};

// A rational functional on the ambient lattice that is integral and nonnegative
// on the cover monoid: e-values per nonzero element plus cached generator values.
class Ray {
public:
    Ray(const CoverLattice& L, std::vector<Rat> e_values);
    static Ray from_k_functional(const CoverLattice& L, const std::vector<Int>& f);

    const CoverLattice& lattice() const { return *L_; }
    const std::vector<Rat>& e_values() const { return e_; }
    const std::vector<Int>& generator_values() const { return gv_; }
    Int denominator() const;
    const Int& value_on_pair(long m, long n) const;
    std::vector<Int> k_functional() const;
    std::vector<long> support() const;  // pair indices with positive value
    bool is_zero() const;

    bool operator==(const Ray& o) const { return gv_ == o.gv_; }
    bool operator<(const Ray& o) const { return gv_ < o.gv_; }

private:
    const CoverLattice* L_;
    std::vector<Rat> e_;
    std::vector<Int> gv_;
};

// Binomial presentation of the monoid algebra on variables x_{m,n}, (m,n) in J
// (pairs with m + n != 0); relations identify two degree-two monomials.
struct MonoidPresentation {
    std::vector<PairIndex> variables;
    struct Relation {
        std::array<long, 2> lhs, rhs;  // indices into `variables`, each side sorted
        bool operator==(const Relation&) const = default;
        bool operator<(const Relation& o) const {
            return std::tie(lhs, rhs) < std::tie(o.lhs, o.rhs);
        }
    };
    std::vector<Relation> relations;
};

MonoidPresentation reduced_presentation(const CoverLattice& L);

// Primitive extreme rays of the dual cone of the cover monoid, sorted by
// generator values.
std::vector<Ray> extremal_rays(const CoverLattice& L);

// The 0/1 ray attached to a surjection eta: M -> Z/l via carries of lifts:
// e-values sigma(eta(m))/l.
Ray pardini_ray(const CoverLattice& L, const GroupHomomorphism& eta);

// H = {m : value on (m,-m) is 0}, always a subgroup (asserted).
std::vector<long> H_of_ray(const Ray& E);

long h_component(const Ray& E, long t);
long h_of_ray(const Ray& E);

// A sequence of rays is smooth when some generators v_1..v_s satisfy
// E^i(v_j) = delta_ij and the generators vanishing on every E^i span the
// common kernel as a lattice.
struct SmoothSequenceResult {
    bool smooth = false;
    std::vector<long> witness;  // pair index per ray when smooth
};
SmoothSequenceResult is_smooth_sequence(const CoverLattice& L, const std::vector<Ray>& rays);
bool is_smooth_ray(const Ray& E);

// A ray whose positive support is exactly the given pair set, if any exists;
// exact rational Fourier-Motzkin feasibility.
std::optional<Ray> support_realizable(const CoverLattice& L, const std::vector<long>& Z);

// No decomposition E = E1 + E2 with E1, E2 nonzero valid rays (exhaustive
// search within the value box; desk scale only).
bool is_indecomposable_ray(const Ray& E);

}  // namespace covermonoid
