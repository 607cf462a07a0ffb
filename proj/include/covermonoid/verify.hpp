#pragma once

#include <string>
#include <vector>

#include "covermonoid/group.hpp"

namespace covermonoid {

// Scale caps for the self-check suite. Group orders are capped at max_order;
// finite-field runs use the smallest admissible prime >= prime.
struct VerifyBounds {
    long max_order = 12;
    long prime = 101;
};

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// One factor list per isomorphism class of abelian groups of order n >= 1,
// in invariant-factor form, deterministically ordered.
std::vector<std::vector<long>> abelian_factor_lists(long n);

// All isomorphism classes with 2 <= |M| <= bound, ascending by order.
std::vector<FiniteAbelianGroup> abelian_groups_up_to(long bound);

// First prime >= start that does not divide size.
long admissible_prime(long start, long size);

// Runs every documented invariant of every module at the given bounds and
// reports one result per property.
std::vector<PropertyResult> run_property_suite(const VerifyBounds& bounds);

}  // namespace covermonoid
