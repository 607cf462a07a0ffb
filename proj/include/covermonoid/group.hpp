#pragma once

#include <string>
#include <vector>

#include "covermonoid/numeric.hpp"

namespace covermonoid {

// A finite abelian group given as a product of cyclic factors Z/o1 x ... x Z/ok.
// Elements are handled as dense indices 0..size-1 in lexicographic coordinate
// order (coordinate 0 most significant), which keeps tables and pair lists flat.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<long> factor_orders);

    static FiniteAbelianGroup parse(const std::string& spec);

    const std::vector<long>& factors() const { return factors_; }
    long size() const { return size_; }
    std::size_t rank() const { return factors_.size(); }
    std::string spec() const;

    std::vector<long> coords(long idx) const;
    long index(const std::vector<long>& coords) const;  // coordinates reduced mod factors

    long add(long a, long b) const;
    long neg(long a) const;
    long mul(long k, long a) const;  // k*a for any integer k
    long order_of(long a) const;
    long exponent() const;

    bool operator==(const FiniteAbelianGroup& other) const { return factors_ == other.factors_; }

private:
    std::vector<long> factors_;
    long size_;
};

// Surjective-or-not homomorphism determined by the images of the canonical
// factor generators of the source.
struct GroupHomomorphism {
    FiniteAbelianGroup source;
    FiniteAbelianGroup target;
    std::vector<long> images;  // target element index per source generator

    long apply(long src) const;
    bool well_defined() const;
    bool surjective() const;
};

std::vector<long> subgroup_generated(const FiniteAbelianGroup& M, const std::vector<long>& gens);

// Unique (r, alpha, N) with r = min{s>0 : sm in <n>}, rm = alpha*n (0 <= alpha < N),
// N = order of n; requires m,n nonzero, distinct, and generating M.
struct TwoGeneratorPresentation {
    long r, alpha, N;
};
TwoGeneratorPresentation recognize_two_generator_presentation(const FiniteAbelianGroup& M,
                                                              long m, long n);

// Concrete model of Z^2/<(r,-alpha),(0,N)> with the classes of e1, e2.
struct TwoDegreeGroup {
    FiniteAbelianGroup group;
    long e1, e2;
};
TwoDegreeGroup make_two_degree_group(long r, long alpha, long N);

std::vector<GroupHomomorphism> enumerate_homomorphisms(const FiniteAbelianGroup& M,
                                                       const FiniteAbelianGroup& target);
std::vector<GroupHomomorphism> enumerate_surjections(const FiniteAbelianGroup& M,
                                                     const FiniteAbelianGroup& target);

// All surjections M -> Z/l over every l > 1 (ascending l, then image order).
std::vector<GroupHomomorphism> cyclic_surjections(const FiniteAbelianGroup& M);

std::vector<long> invariant_factors(const FiniteAbelianGroup& M);

// (p, l) if M is isomorphic to (Z/p)^l with p prime.
struct ElementaryPower {
    long p, l;
};
bool is_elementary_power(const FiniteAbelianGroup& M, ElementaryPower* out = nullptr);

// Quotient M/H with projection images and the lex-least section representatives.
struct QuotientData {
    FiniteAbelianGroup quotient;
    GroupHomomorphism projection;      // M -> quotient
    std::vector<long> section;         // quotient index -> lex-least preimage in M
};
QuotientData quotient_by(const FiniteAbelianGroup& M, const std::vector<long>& subgroup_elements);

}  // namespace covermonoid
