#ifndef HEISYM_ALGEBRA_IO_HPP
#define HEISYM_ALGEBRA_IO_HPP

#include "heisym/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heisym {

/// Result of loading an algebra file. format_errors cover unreadable or
/// malformed JSON (usage-level problems); validation_errors cover
/// structurally well-formed files that fail antisymmetry or Jacobi.
struct AlgebraFileResult {
  std::optional<LieAlgebra> algebra;
  std::vector<std::string> format_errors;
  std::vector<std::string> validation_errors;
};

/// JSON format: {"dim": n, "brackets": [{"i": i, "j": j,
/// "coeffs": [[k, "num/den"], ...]}, ...]} with 1-based indices; pairs not
/// listed are zero. Listing both (i,j) and (j,i) is allowed only when the
/// two are antisymmetry-consistent.
AlgebraFileResult load_algebra_json(const std::string& text, const std::string& name);
AlgebraFileResult load_algebra_file(const std::string& path);

std::string algebra_to_json(const LieAlgebra& L);

}  // namespace heisym

#endif
