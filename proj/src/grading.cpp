#include "heisym/grading.hpp"

#include <sstream>
#include <stdexcept>

namespace heisym {

std::string GroupLabel::to_string() const {
  if (k == 0) return "()";
  std::ostringstream out;
  out << "(";
  for (unsigned i = 0; i < k; ++i) {
    if (i) out << ",";
    out << (((bits >> i) & 1u) ? '-' : '+');
  }
  out << ")";
  return out.str();
}

Grading::Grading(LieAlgebra algebra, unsigned k, std::vector<Subspace> components)
    : algebra_(std::move(algebra)), k_(k), components_(std::move(components)) {
  if (components_.size() != (std::size_t{1} << k_))
    throw std::invalid_argument("grading needs one component per label");
  for (const auto& c : components_)
    if (c.ambient_dim() != algebra_.dim())
      throw std::invalid_argument("component ambient dimension mismatch");
}

Grading grading_from_involutions(const LieAlgebra& L, const std::vector<Matrix>& taus) {
  const std::size_t n = L.dim();
  for (const auto& t : taus) {
    if (!L.is_automorphism(t))
      throw std::invalid_argument("grading_from_involutions: not an automorphism");
    if (!(t * t).is_identity())
      throw std::invalid_argument("grading_from_involutions: not an involution");
  }
  for (std::size_t i = 0; i < taus.size(); ++i)
    for (std::size_t j = i + 1; j < taus.size(); ++j)
      if (taus[i] * taus[j] != taus[j] * taus[i])
        throw std::invalid_argument("grading_from_involutions: involutions do not commute");

  unsigned k = static_cast<unsigned>(taus.size());
  std::vector<Subspace> components;
  components.reserve(std::size_t{1} << k);
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    Subspace comp = Subspace::full(n);
    for (unsigned i = 0; i < k; ++i) {
      Rational sign = ((bits >> i) & 1u) ? Rational(-1) : Rational(1);
      comp = intersect(comp, kernel(taus[i] - Matrix::identity(n) * sign));
    }
    components.push_back(std::move(comp));
  }
  return Grading(L, k, std::move(components));
}

std::vector<std::string> check_grading(const Grading& g) {
  std::vector<std::string> violations;
  const LieAlgebra& L = g.algebra();
  const std::size_t n = L.dim();

  std::size_t dim_sum = 0;
  Subspace total = Subspace::zero(n);
  for (unsigned bits = 0; bits < g.component_count(); ++bits) {
    dim_sum += g.component(bits).dim();
    total = subspace_sum(total, g.component(bits));
  }
  if (dim_sum != n || total.dim() != n)
    violations.push_back("components do not form a direct sum of the full algebra");

  for (unsigned a = 0; a < g.component_count(); ++a)
    for (unsigned b = 0; b < g.component_count(); ++b) {
      const Subspace& ga = g.component(a);
      const Subspace& gb = g.component(b);
      const Subspace& target = g.component(a ^ b);
      for (std::size_t i = 0; i < ga.dim(); ++i)
        for (std::size_t j = 0; j < gb.dim(); ++j) {
          Vec br = L.bracket(ga.basis().row(i), gb.basis().row(j));
          if (!target.contains(br)) {
            std::ostringstream out;
            out << "[g_" << g.label(a).to_string() << ", g_" << g.label(b).to_string()
                << "] escapes g_" << g.label(a ^ b).to_string() << ": bracket "
                << vec_to_string(br);
            violations.push_back(out.str());
          }
        }
    }
  return violations;
}

std::vector<unsigned> support(const Grading& g) {
  std::vector<unsigned> labels;
  for (unsigned bits = 0; bits < g.component_count(); ++bits)
    if (g.component(bits).dim() > 0) labels.push_back(bits);
  return labels;
}

bool is_irreducible(const Grading& g) {
  // The support must span the whole group over F_2. Echelon basis indexed
  // by top set bit.
  std::vector<unsigned> pivot(g.k(), 0);
  unsigned rank = 0;
  for (unsigned s : support(g)) {
    unsigned v = s;
    for (unsigned bit = g.k(); bit-- > 0 && v;) {
      if (!((v >> bit) & 1u)) continue;
      if (pivot[bit] == 0) {
        pivot[bit] = v;
        ++rank;
        v = 0;
      } else {
        v ^= pivot[bit];
      }
    }
  }
  return rank == g.k();
}

bool is_label_automorphism(const std::vector<unsigned>& omega, unsigned k) {
  std::size_t size = std::size_t{1} << k;
  if (omega.size() != size) return false;
  std::vector<bool> seen(size, false);
  for (unsigned img : omega) {
    if (img >= size || seen[img]) return false;
    seen[img] = true;
  }
  if (omega[0] != 0) return false;
  for (unsigned a = 0; a < size; ++a)
    for (unsigned b = 0; b < size; ++b)
      if (omega[a ^ b] != (omega[a] ^ omega[b])) return false;
  return true;
}

bool equivalent_under(const Grading& g, const Grading& gp, const Matrix& pi,
                      const std::vector<unsigned>& omega) {
  if (!g.algebra().is_automorphism(pi))
    throw std::invalid_argument("equivalent_under: pi is not an automorphism");
  if (!is_label_automorphism(omega, g.k()))
    throw std::invalid_argument("equivalent_under: omega is not a group automorphism");
  if (g.k() != gp.k() || g.algebra().dim() != gp.algebra().dim()) return false;

  for (unsigned bits = 0; bits < g.component_count(); ++bits) {
    const Subspace& source = g.component(omega[bits]);
    std::vector<Vec> image;
    for (std::size_t i = 0; i < source.dim(); ++i)
      image.push_back(pi.apply(source.basis().row(i)));
    if (Subspace::span(g.algebra().dim(), image) != gp.component(bits)) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<unsigned>> label_automorphisms(unsigned k) {
  std::size_t size = std::size_t{1} << k;
  std::vector<std::vector<unsigned>> result;
  // Enumerate k x k bit matrices acting on bitmasks; keep the invertible ones.
  std::size_t matrices = std::size_t{1} << (k * k);
  for (std::size_t code = 0; code < matrices; ++code) {
    std::vector<unsigned> omega(size, 0);
    for (unsigned bits = 0; bits < size; ++bits) {
      unsigned img = 0;
      for (unsigned col = 0; col < k; ++col)
        if ((bits >> col) & 1u) img ^= static_cast<unsigned>((code >> (col * k)) & ((1u << k) - 1));
      omega[bits] = img;
    }
    if (is_label_automorphism(omega, k)) result.push_back(std::move(omega));
  }
  if (k == 0) result.push_back({0});
  return result;
}

}  // namespace

std::optional<std::pair<Matrix, std::vector<unsigned>>> find_equivalence_witness_h3(
    const Grading& g, const Grading& gp) {
  if (g.algebra().dim() != 3 || gp.algebra().dim() != 3 || g.k() != gp.k())
    return std::nullopt;
  auto omegas = label_automorphisms(g.k());
  const std::vector<Rational> pool = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  const std::vector<Rational> tail = {0, 1, -1};
  for (const auto& b1 : pool)
    for (const auto& b2 : pool)
      for (const auto& b3 : pool)
        for (const auto& b4 : pool) {
          if (b1 * b4 - b2 * b3 == 0) continue;
          for (const auto& t1 : tail)
            for (const auto& t2 : tail) {
              Matrix pi = Matrix{{b1, b2, 0}, {b3, b4, 0}, {t1, t2, b1 * b4 - b2 * b3}};
              for (const auto& omega : omegas)
                if (equivalent_under(g, gp, pi, omega)) return std::make_pair(pi, omega);
            }
        }
  return std::nullopt;
}

namespace {

Subspace span_of_indices(std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vec> rows;
  for (auto i : idx) rows.push_back(unit_vec(n, i));
  return Subspace::span(n, rows);
}

}  // namespace

Grading heisenberg_grading(HeisenbergGradingName name, std::size_t p, std::size_t sub) {
  LieAlgebra L = heisenberg(p);
  const std::size_t n = 2 * p + 1;

  std::vector<std::size_t> odds, evens;
  for (std::size_t s = 0; s < p; ++s) {
    odds.push_back(2 * s);
    evens.push_back(2 * s + 1);
  }
  const std::size_t center = n - 1;

  switch (name) {
    case HeisenbergGradingName::H3Z2A: {
      if (p != 1) throw std::invalid_argument("H3Z2A needs p = 1");
      return Grading(L, 1, {span_of_indices(3, {1}), span_of_indices(3, {0, 2})});
    }
    case HeisenbergGradingName::H3Z2B: {
      if (p != 1) throw std::invalid_argument("H3Z2B needs p = 1");
      return Grading(L, 1, {span_of_indices(3, {0}), span_of_indices(3, {1, 2})});
    }
    case HeisenbergGradingName::Z2Center: {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i + 1 < n; ++i) rest.push_back(i);
      return Grading(L, 1, {span_of_indices(n, {center}), span_of_indices(n, rest)});
    }
    case HeisenbergGradingName::Z2Sub: {
      if (sub < 1 || sub >= p) throw std::invalid_argument("Z2Sub needs 1 <= sub < p");
      std::vector<std::size_t> g0, g1;
      for (std::size_t i = 0; i < 2 * sub; ++i) g0.push_back(i);
      g0.push_back(center);
      for (std::size_t i = 2 * sub; i < 2 * p; ++i) g1.push_back(i);
      return Grading(L, 1, {span_of_indices(n, g0), span_of_indices(n, g1)});
    }
    case HeisenbergGradingName::Z2Odd: {
      std::vector<std::size_t> g1 = evens;
      g1.push_back(center);
      return Grading(L, 1, {span_of_indices(n, odds), span_of_indices(n, g1)});
    }
    case HeisenbergGradingName::Z2Even: {
      std::vector<std::size_t> g1 = odds;
      g1.push_back(center);
      return Grading(L, 1, {span_of_indices(n, evens), span_of_indices(n, g1)});
    }
    case HeisenbergGradingName::Z22: {
      return Grading(L, 2,
                     {Subspace::zero(n), span_of_indices(n, odds), span_of_indices(n, evens),
                      span_of_indices(n, {center})});
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace heisym
