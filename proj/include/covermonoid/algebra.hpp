#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covermonoid/field.hpp"
#include "covermonoid/group.hpp"
#include "covermonoid/lattice.hpp"

namespace covermonoid {

// Structure constants of an M-graded algebra with basis (v_m): v_m v_n = psi_{m,n} v_{m+n}.
class MultiplicationTable {
public:
    MultiplicationTable(FiniteAbelianGroup M, Field F);

    const FiniteAbelianGroup& group() const { return M_; }
    const Field& field() const { return F_; }
    const FieldScalar& at(long m, long n) const { return t_[m * M_.size() + n]; }
    void set(long m, long n, const FieldScalar& v);  // sets both (m,n) and (n,m)

    bool operator==(const MultiplicationTable& o) const;

private:
    FiniteAbelianGroup M_;
    Field F_;
    std::vector<FieldScalar> t_;
};

// Arbitrary unit-valued function on M with u_0 = 1 (a basis rescaling).
struct UnitCharacter {
    FiniteAbelianGroup M;
    std::vector<FieldScalar> u;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
};
ValidationReport validate(const MultiplicationTable& psi);

MultiplicationTable from_ray(const Ray& E, const Field& F,
                             const std::optional<UnitCharacter>& twist = std::nullopt);
MultiplicationTable twist_table(const MultiplicationTable& psi, const UnitCharacter& u);

std::vector<long> H_of_table(const MultiplicationTable& psi);
long h_component_table(const MultiplicationTable& psi, long t);
long h_of_table(const MultiplicationTable& psi);

// Structure constants on M/H for a table that is split (identically 1) on H x H.
MultiplicationTable reduce_mod_H(const MultiplicationTable& psi, const QuotientData& q);

// {m : h_component = 1}; requires H_psi = 0, and then the set has h elements.
std::vector<long> minimum_generating_degrees(const MultiplicationTable& psi);

// Two-variable quotient ring k[s,t]/(s^z - a t^y, t^x - b s^w, s^sr t^dq - a^gamma b)
// with deg s = m, deg t = n and a prescribed monomial basis indexed by M.
struct QuotientRingSpec {
    FiniteAbelianGroup M = FiniteAbelianGroup(std::vector<long>{});
    long m = 0, n = 0;  // degrees of s and t
    long z = 0, y = 0, x = 0, w = 0, sr = 0, dq = 0, gamma = 0;
    FieldScalar a, b;
    std::vector<std::pair<long, long>> basis;  // element index -> (s-exp, t-exp)
};
MultiplicationTable quotient_ring_structure_constants(const QuotientRingSpec& spec);

struct MainComponentResult {
    bool member = false;
    std::optional<Ray> witness;
};
MainComponentResult in_main_component(const CoverLattice& L, const MultiplicationTable& psi);

}  // namespace covermonoid
