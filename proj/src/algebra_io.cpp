#include "heisym/algebra_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace heisym {

namespace {

using nlohmann::json;

}  // namespace

AlgebraFileResult load_algebra_json(const std::string& text, const std::string& name) {
  AlgebraFileResult result;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    result.format_errors.push_back(std::string("invalid JSON: ") + e.what());
    return result;
  }

  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    result.format_errors.push_back("missing or invalid \"dim\"");
    return result;
  }
  std::size_t dim = doc["dim"].get<std::size_t>();
  if (dim == 0) {
    result.format_errors.push_back("\"dim\" must be positive");
    return result;
  }

  // Collect the full tensor, tracking which pairs were given explicitly so
  // that inconsistent double listings are caught rather than repaired.
  std::vector<std::vector<Vec>> structure(dim, std::vector<Vec>(dim, zero_vec(dim)));
  std::vector<std::vector<bool>> listed(dim, std::vector<bool>(dim, false));

  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) {
      result.format_errors.push_back("\"brackets\" must be an array");
      return result;
    }
    for (const auto& entry : doc["brackets"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("coeffs") || !entry["i"].is_number_unsigned() ||
          !entry["j"].is_number_unsigned() || !entry["coeffs"].is_array()) {
        result.format_errors.push_back("malformed bracket entry");
        return result;
      }
      std::size_t i = entry["i"].get<std::size_t>();
      std::size_t j = entry["j"].get<std::size_t>();
      if (i < 1 || i > dim || j < 1 || j > dim || i == j) {
        result.format_errors.push_back("bracket indices out of range (1-based, i != j)");
        return result;
      }
      Vec coeffs = zero_vec(dim);
      for (const auto& pair : entry["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_string()) {
          result.format_errors.push_back("malformed coefficient pair");
          return result;
        }
        std::size_t k = pair[0].get<std::size_t>();
        if (k < 1 || k > dim) {
          result.format_errors.push_back("coefficient index out of range");
          return result;
        }
        auto value = parse_rational(pair[1].get<std::string>());
        if (!value) {
          result.format_errors.push_back("coefficient is not a \"num/den\" rational: " +
                                         pair[1].get<std::string>());
          return result;
        }
        coeffs[k - 1] += *value;
      }
      if (listed[i - 1][j - 1]) {
        result.format_errors.push_back("duplicate bracket entry");
        return result;
      }
      listed[i - 1][j - 1] = true;
      structure[i - 1][j - 1] = std::move(coeffs);
    }
  }

  // Fill unlisted mirror pairs by antisymmetry; explicitly listed mirrors
  // must already be antisymmetric and are left for the constructor check.
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (listed[i][j] && !listed[j][i]) {
        for (std::size_t k = 0; k < dim; ++k) structure[j][i][k] = -structure[i][j][k];
        listed[j][i] = true;
      }

  try {
    LieAlgebra algebra(name, std::move(structure));
    auto violations = algebra.check_jacobi();
    if (!violations.empty()) {
      for (const auto& v : violations) {
        std::ostringstream out;
        out << "Jacobi identity fails on basis triple (" << v.i + 1 << "," << v.j + 1 << ","
            << v.k + 1 << ")";
        result.validation_errors.push_back(out.str());
      }
      return result;
    }
    result.algebra = std::move(algebra);
  } catch (const std::invalid_argument& e) {
    result.validation_errors.push_back(e.what());
  }
  return result;
}

AlgebraFileResult load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    AlgebraFileResult result;
    result.format_errors.push_back("cannot open file: " + path);
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_algebra_json(buffer.str(), "file:" + path);
}

std::string algebra_to_json(const LieAlgebra& L) {
  nlohmann::ordered_json doc;
  doc["dim"] = L.dim();
  doc["brackets"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vec& coeffs = L.basis_bracket(i, j);
      if (is_zero_vec(coeffs)) continue;
      nlohmann::ordered_json entry;
      entry["i"] = i + 1;
      entry["j"] = j + 1;
      entry["coeffs"] = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (coeffs[k] != 0)
          entry["coeffs"].push_back({k + 1, rational_to_string(coeffs[k])});
      doc["brackets"].push_back(entry);
    }
  return doc.dump(2);
}

}  // namespace heisym
