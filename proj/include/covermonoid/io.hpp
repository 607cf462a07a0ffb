#pragma once

#include <json.hpp>

#include <string>

#include "covermonoid/algebra.hpp"
#include "covermonoid/group.hpp"
#include "covermonoid/lattice.hpp"
#include "covermonoid/stack.hpp"
#include "covermonoid/two_degree.hpp"

namespace covermonoid {

// All serialization uses insertion-ordered JSON with every integer rendered
// as a decimal string; group elements appear as coordinate tuples, except in
// presentations where variables are named by element index pairs.
using Json = nlohmann::ordered_json;

std::string int_str(const Int& v);
std::string rat_str(const Rat& v);  // "p/q", or "p" when integral
Json int_vector_json(const std::vector<Int>& v);
Json long_vector_json(const std::vector<long>& v);
Json matrix_json(const IntMatrix& A);

Json element_json(const FiniteAbelianGroup& M, long e);
Json scalar_json(const FieldScalar& s);

Json ray_json(const Ray& E);
Json table_json(const MultiplicationTable& psi);
Json presentation_json(const MonoidPresentation& P);
std::string presentation_text(const MonoidPresentation& P);  // one relation per line
Json fan_json(const Fan& f);
std::string fan_text(const Fan& f);  // rays first, then one cone per line

Json invariants_json(const TwoDegreeInvariants& I);
Json sigma_json(const SigmaDatum& chi);
Json nc_row_json(const NCRow& row);
Json smoothness_json(const FiniteAbelianGroup& M, const SmoothnessVerdict& v);
Json irreducibility_json(const FiniteAbelianGroup& M, const IrreducibilityReport& r);

}  // namespace covermonoid
