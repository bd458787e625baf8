#pragma once

#include <string>

#include "ocw/algebra.hpp"

#include "json.hpp"

namespace ocw {

/// Algebra JSON document: fields name, elements, unit, product (row = left
/// operand), omega, omegastar (name -> name maps), shuffle (list of
/// {set, value}). Subsets containing the unit may be omitted; sh(P ∪ {1}) is
/// derived as sh(P) and sh({1}) as 1. Duplicate or missing subset entries
/// after derivation are rejected.
OAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const OAlgebra& a);

OAlgebra load_algebra_file(const std::string& path);

}  // namespace ocw
