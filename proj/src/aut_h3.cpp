#include "heisym/aut_h3.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace heisym {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool is_h3_involution(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 3) return false;
  return (m * m).is_identity();
}

}  // namespace

Matrix aut_matrix(const AutParams& p) {
  Rational d = p.delta();
  if (d == 0) throw std::invalid_argument("aut_matrix: delta must be nonzero");
  return Matrix{{p.a1, p.a2, 0}, {p.a3, p.a4, 0}, {p.a5, p.a6, d}};
}

std::string family_name(InvolutionFamily f) {
  switch (f) {
    case InvolutionFamily::Identity: return "Identity";
    case InvolutionFamily::Tau1: return "Tau1";
    case InvolutionFamily::Tau2: return "Tau2";
    case InvolutionFamily::Tau3: return "Tau3";
    case InvolutionFamily::Tau4: return "Tau4";
  }
  return "?";
}

InvolutionTag InvolutionTag::tau1(Rational a3, Rational a6) {
  return {InvolutionFamily::Tau1, {std::move(a3), std::move(a6)}};
}
InvolutionTag InvolutionTag::tau2(Rational a3, Rational a5) {
  return {InvolutionFamily::Tau2, {std::move(a3), std::move(a5)}};
}
InvolutionTag InvolutionTag::tau3(Rational a1, Rational a2, Rational a6) {
  return {InvolutionFamily::Tau3, {std::move(a1), std::move(a2), std::move(a6)}};
}
InvolutionTag InvolutionTag::tau4(Rational a5, Rational a6) {
  return {InvolutionFamily::Tau4, {std::move(a5), std::move(a6)}};
}

std::string InvolutionTag::to_string() const {
  std::ostringstream out;
  out << family_name(family);
  if (!params.empty()) {
    out << "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out << ",";
      out << rational_to_string(params[i]);
    }
    out << ")";
  }
  return out.str();
}

Matrix tau(const InvolutionTag& tag) {
  switch (tag.family) {
    case InvolutionFamily::Identity:
      return Matrix::identity(3);
    case InvolutionFamily::Tau1: {
      const Rational& a3 = tag.params.at(0);
      const Rational& a6 = tag.params.at(1);
      return Matrix{{-1, 0, 0}, {a3, 1, 0}, {a3 * a6 / 2, a6, -1}};
    }
    case InvolutionFamily::Tau2: {
      const Rational& a3 = tag.params.at(0);
      const Rational& a5 = tag.params.at(1);
      return Matrix{{1, 0, 0}, {a3, -1, 0}, {a5, 0, -1}};
    }
    case InvolutionFamily::Tau3: {
      const Rational& a1 = tag.params.at(0);
      const Rational& a2 = tag.params.at(1);
      const Rational& a6 = tag.params.at(2);
      if (a2 == 0) throw std::invalid_argument("tau3 needs a2 != 0");
      return Matrix{{a1, a2, 0},
                    {(1 - a1 * a1) / a2, -a1, 0},
                    {(1 + a1) * a6 / a2, a6, -1}};
    }
    case InvolutionFamily::Tau4: {
      const Rational& a5 = tag.params.at(0);
      const Rational& a6 = tag.params.at(1);
      return Matrix{{-1, 0, 0}, {0, -1, 0}, {a5, a6, 1}};
    }
  }
  throw std::logic_error("unreachable");
}

InvolutionTag classify_involution(const Matrix& m) {
  if (!heisenberg(1).is_automorphism(m))
    throw std::invalid_argument("classify_involution: not an automorphism of h3");
  if (!is_h3_involution(m))
    throw std::invalid_argument("classify_involution: matrix does not square to identity");

  if (m.is_identity()) return InvolutionTag::identity();
  // Tau4: upper block -I.
  if (m(0, 0) == -1 && m(0, 1) == 0 && m(1, 0) == 0 && m(1, 1) == -1)
    return InvolutionTag::tau4(m(2, 0), m(2, 1));
  // Tau1: diag block (-1, 1), a2 = 0.
  if (m(0, 0) == -1 && m(0, 1) == 0 && m(1, 1) == 1)
    return InvolutionTag::tau1(m(1, 0), m(2, 1));
  // Tau2: diag block (1, -1), a2 = 0.
  if (m(0, 0) == 1 && m(0, 1) == 0 && m(1, 1) == -1)
    return InvolutionTag::tau2(m(1, 0), m(2, 0));
  // Tau3: a2 != 0.
  if (m(0, 1) != 0) return InvolutionTag::tau3(m(0, 0), m(0, 1), m(2, 1));
  throw std::logic_error("involutive automorphism escaped the four families");
}

Matrix compose(const Matrix& m1, const Matrix& m2) {
  if (m1.rows() != 3 || m1.cols() != 3 || m2.rows() != 3 || m2.cols() != 3)
    throw std::invalid_argument("compose expects 3x3 matrices");
  return m1 * m2;
}

FiniteGroupTable::FiniteGroupTable(std::vector<Matrix> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty() || !elements_[0].is_identity())
    throw std::invalid_argument("group table must start with the identity");
  table_.assign(elements_.size(), std::vector<std::size_t>(elements_.size(), 0));
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      auto idx = index_of(elements_[i] * elements_[j]);
      if (!idx) throw std::invalid_argument("element set not closed under composition");
      table_[i][j] = *idx;
    }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < elements_.size() && !has_inverse; ++j)
      has_inverse = table_[i][j] == 0;
    if (!has_inverse) throw std::invalid_argument("element without inverse");
  }
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

std::size_t FiniteGroupTable::element_order(std::size_t i) const {
  std::size_t acc = i;
  std::size_t ord = 1;
  while (acc != 0) {
    acc = table_[acc][i];
    ++ord;
    if (ord > elements_.size()) throw std::logic_error("order exceeds group size");
  }
  return ord;
}

std::size_t FiniteGroupTable::exponent() const {
  std::size_t e = 1;
  for (std::size_t i = 0; i < elements_.size(); ++i) e = std::max(e, element_order(i));
  return e;
}

std::optional<std::size_t> FiniteGroupTable::index_of(const Matrix& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == m) return i;
  return std::nullopt;
}

bool FiniteGroupTable::same_element_set(const FiniteGroupTable& other) const {
  if (order() != other.order()) return false;
  for (const auto& m : elements_)
    if (!other.index_of(m)) return false;
  return true;
}

FiniteGroupTable group_closure(const std::vector<Matrix>& generators, std::size_t bound) {
  std::size_t n = generators.empty() ? 3 : generators[0].rows();
  std::vector<Matrix> elements{Matrix::identity(n)};
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("generators have mixed sizes");
    bool known = false;
    for (const auto& e : elements) known = known || e == g;
    if (!known) elements.push_back(g);
  }
  // Breadth-first products until stable.
  std::size_t frontier_start = 0;
  while (true) {
    std::size_t size_before = elements.size();
    for (std::size_t i = frontier_start; i < size_before; ++i)
      for (std::size_t j = 0; j < size_before; ++j)
        for (const Matrix& prod : {elements[i] * elements[j], elements[j] * elements[i]}) {
          bool known = false;
          for (const auto& e : elements) known = known || e == prod;
          if (!known) {
            elements.push_back(prod);
            if (elements.size() > bound)
              throw std::runtime_error("group closure exceeded bound");
          }
        }
    if (elements.size() == size_before) break;
    frontier_start = 0;  // small groups: re-scan everything
  }
  return FiniteGroupTable(std::move(elements));
}

FiniteGroupTable gamma7(const Rational& a3, const Rational& a5, const Rational& a6) {
  Matrix t1 = tau(InvolutionTag::tau1(a3, a6));
  Matrix t2 = tau(InvolutionTag::tau2(-a3, a5));
  Matrix t4 = tau(InvolutionTag::tau4(-a3 * a6 / 2 - a5, -a6));
  FiniteGroupTable table({Matrix::identity(3), t1, t2, t4});
  if (!table.is_abelian()) throw std::logic_error("gamma7 is not abelian");
  return table;
}

FiniteGroupTable gamma8(const Rational& a1, const Rational& a2, const Rational& a6,
                        const Rational& a6p) {
  if (a2 == 0) throw std::invalid_argument("gamma8 needs a2 != 0");
  Matrix t3a = tau(InvolutionTag::tau3(a1, a2, a6));
  Matrix t3b = tau(InvolutionTag::tau3(-a1, -a2, a6p));
  Matrix t4 = tau(InvolutionTag::tau4((a6p * (1 - a1) - a6 * (1 + a1)) / a2, -a6 - a6p));
  FiniteGroupTable table({Matrix::identity(3), t3a, t3b, t4});
  if (!table.is_abelian()) throw std::logic_error("gamma8 is not abelian");
  return table;
}

bool conjugates_to(const Matrix& sigma, const FiniteGroupTable& g, const FiniteGroupTable& h) {
  auto inv = inverse(sigma);
  if (!inv) throw std::invalid_argument("conjugates_to: sigma is singular");
  std::vector<Matrix> conjugated;
  conjugated.reserve(g.order());
  for (const auto& m : g.elements()) conjugated.push_back(*inv * m * sigma);
  if (conjugated.size() != h.order()) return false;
  for (const auto& m : conjugated)
    if (!h.index_of(m)) return false;
  return true;
}

std::optional<Matrix> order_k_instance(std::size_t k, const Rational& a2, const Rational& a3,
                                       const Rational& a5, const Rational& a6) {
  // cos(2*pi/k) is rational only for k in {1, 2, 3, 4, 6}.
  Rational cos_val;
  if (k == 3)
    cos_val = Rational(-1, 2);
  else if (k == 4)
    cos_val = 0;
  else if (k == 6)
    cos_val = Rational(1, 2);
  else
    return std::nullopt;

  Rational disc = cos_val * cos_val - 1 - a2 * a3;
  auto root = rational_sqrt(disc);
  if (!root) return std::nullopt;

  // delta = cos^2 - root^2 - a2*a3 = 1, so the family stays invertible.
  AutParams p{cos_val - *root, a2, a3, cos_val + *root, a5, a6};
  Matrix m = aut_matrix(p);

  // The order must be exactly k; verified by repeated composition.
  Matrix acc = m;
  for (std::size_t j = 1; j < k; ++j) {
    if (acc.is_identity()) return std::nullopt;
    acc = acc * m;
  }
  if (!acc.is_identity()) return std::nullopt;
  return m;
}

Matrix sigma3_example_sigma1() { return Matrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}; }

Matrix sigma3_example_sigma2(const Rational& alpha) {
  if (alpha == 0) throw std::invalid_argument("sigma2 needs alpha != 0");
  return Matrix{{Rational(-1, 2), alpha, 0},
                {Rational(-3, 4) / alpha, Rational(-1, 2), 0},
                {0, 0, 1}};
}

std::optional<ConjugacyWitness> find_gamma7_gamma8_witness(const Rational& a3,
                                                           const Rational& a5,
                                                           const Rational& a6) {
  FiniteGroupTable g7 = gamma7(a3, a5, a6);
  const std::vector<Rational> block_pool = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  const std::vector<Rational> tail_pool = {0, 1, -1};

  for (const auto& b1 : block_pool)
    for (const auto& b2 : block_pool)
      for (const auto& b3 : block_pool)
        for (const auto& b4 : block_pool) {
          AutParams params{b1, b2, b3, b4, 0, 0};
          if (params.delta() == 0) continue;
          for (const auto& t1 : tail_pool)
            for (const auto& t2 : tail_pool) {
              params.a5 = t1;
              params.a6 = t2;
              Matrix sigma = aut_matrix(params);
              Matrix sigma_inv = *inverse(sigma);

              // Conjugate and see whether the image is a gamma8-shaped group:
              // it must contain two Tau3 involutions of opposite parameters.
              std::optional<InvolutionTag> first_t3;
              std::array<Rational, 4> g8_params;
              bool viable = true;
              for (const auto& m : g7.elements()) {
                if (m.is_identity()) continue;
                Matrix c = sigma_inv * m * sigma;
                InvolutionTag tag = classify_involution(c);
                if (tag.family != InvolutionFamily::Tau3) continue;
                if (!first_t3) {
                  first_t3 = tag;
                } else {
                  if (tag.params[0] != -first_t3->params[0] ||
                      tag.params[1] != -first_t3->params[1]) {
                    viable = false;
                    break;
                  }
                  g8_params = {first_t3->params[0], first_t3->params[1],
                               first_t3->params[2], tag.params[2]};
                }
              }
              if (!viable || !first_t3 || g8_params[1] == 0) continue;
              FiniteGroupTable g8 =
                  gamma8(g8_params[0], g8_params[1], g8_params[2], g8_params[3]);
              if (conjugates_to(sigma, g7, g8))
                return ConjugacyWitness{sigma, g8_params};
            }
        }
  return std::nullopt;
}

}  // namespace heisym
