#pragma once

#include <vector>

#include "covermonoid/linalg.hpp"

namespace covermonoid {

// A rational polyhedral cone given by integer generators in a fixed lattice basis.
struct RationalCone {
    long ambient_rank = 0;
    std::vector<std::vector<Int>> generators;
};

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

// Extreme rays of the dual cone {f : f(g) >= 0 for all generators g}, primitive
// and sorted lexicographically. Requires the generators to span the ambient
// space, which makes the dual cone pointed. Double description method.
std::vector<std::vector<Int>> dual_cone_extreme_rays(const RationalCone& C);

// Reference computation of the same set by enumerating all (rank-1)-subsets of
// generators and keeping the sign-consistent kernel vectors. `parallel` selects
// the OpenMP work-shared variant; both produce identical output.
std::vector<std::vector<Int>> dual_cone_extreme_rays_enumerated(const RationalCone& C,
                                                                bool parallel);

// Membership of v in the cone spanned by `rays` (not necessarily full
// dimensional); exact, via facet normals computed inside the linear span.
bool cone_membership(const std::vector<std::vector<Int>>& rays, const std::vector<Int>& v);

}  // namespace covermonoid
