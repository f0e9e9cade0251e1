#include "heisym/metrics.hpp"

#include "heisym/aut_h3.hpp"

#include <sstream>
#include <stdexcept>

namespace heisym {

ReductiveSplit::ReductiveSplit(LieAlgebra algebra, unsigned k, Subspace h, Matrix m_basis,
                               std::vector<unsigned> m_labels)
    : algebra_(std::move(algebra)),
      k_(k),
      h_(std::move(h)),
      m_space_(Subspace::row_space(m_basis)),
      m_basis_(std::move(m_basis)),
      m_labels_(std::move(m_labels)) {
  const std::size_t n = algebra_.dim();
  if (m_labels_.size() != m_basis_.rows())
    throw std::invalid_argument("one label per m basis vector required");
  if (h_.dim() + m_basis_.rows() != n || m_space_.dim() != m_basis_.rows())
    throw std::invalid_argument("h and m do not decompose the algebra");
  Matrix columns = h_.basis().transpose().hstack(m_basis_.transpose());
  auto inv = inverse(columns);
  if (!inv) throw std::invalid_argument("h and m are not complementary");
  decomp_inverse_ = *inv;
}

Vec ReductiveSplit::h_coords(const Vec& ambient) const {
  Vec coords = decomp_inverse_.apply(ambient);
  return Vec(coords.begin(), coords.begin() + h_.dim());
}

Vec ReductiveSplit::m_coords_of_projection(const Vec& ambient) const {
  Vec coords = decomp_inverse_.apply(ambient);
  return Vec(coords.begin() + h_.dim(), coords.end());
}

Vec ReductiveSplit::m_coords(const Vec& ambient) const {
  Vec coords = decomp_inverse_.apply(ambient);
  for (std::size_t i = 0; i < h_.dim(); ++i)
    if (coords[i] != 0) throw std::invalid_argument("vector is not inside m");
  return Vec(coords.begin() + h_.dim(), coords.end());
}

Vec ReductiveSplit::ambient_from_m(const Vec& m_coords) const {
  if (m_coords.size() != m_dim()) throw std::invalid_argument("m coordinate length mismatch");
  Vec v = zero_vec(algebra_.dim());
  for (std::size_t i = 0; i < m_dim(); ++i)
    v = add(v, scale(m_coords[i], m_basis_.row(i)));
  return v;
}

Vec ReductiveSplit::ambient_from_h(const Vec& h_coords) const {
  if (h_coords.size() != h_.dim()) throw std::invalid_argument("h coordinate length mismatch");
  Vec v = zero_vec(algebra_.dim());
  for (std::size_t i = 0; i < h_.dim(); ++i)
    v = add(v, scale(h_coords[i], h_.basis().row(i)));
  return v;
}

std::vector<std::size_t> ReductiveSplit::label_block(unsigned label) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m_labels_.size(); ++i)
    if (m_labels_[i] == label) idx.push_back(i);
  return idx;
}

bool ReductiveSplit::operator==(const ReductiveSplit& other) const {
  return k_ == other.k_ && h_ == other.h_ && m_basis_ == other.m_basis_ &&
         m_labels_ == other.m_labels_ && algebra_.dim() == other.algebra_.dim();
}

ReductiveSplit reductive_split(const Grading& g) {
  if (!check_grading(g).empty())
    throw std::invalid_argument("reductive_split: grading axioms fail");
  const LieAlgebra& L = g.algebra();
  const Subspace& h = g.component(0);

  Matrix m_basis(0, L.dim());
  std::vector<unsigned> labels;
  for (unsigned bits = 1; bits < g.component_count(); ++bits) {
    const Subspace& comp = g.component(bits);
    m_basis = m_basis.vstack(comp.basis());
    for (std::size_t i = 0; i < comp.dim(); ++i) labels.push_back(bits);
  }
  ReductiveSplit split(L, g.k(), h, m_basis, labels);

  // Reductive inclusions, verified on basis pairs.
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (!h.contains(L.bracket(h.basis().row(i), h.basis().row(j))))
        throw std::invalid_argument("[h,h] is not contained in h");
    for (std::size_t j = 0; j < split.m_dim(); ++j)
      if (!split.m().contains(L.bracket(h.basis().row(i), split.m_basis().row(j))))
        throw std::invalid_argument("[h,m] is not contained in m");
  }
  return split;
}

SymBilinearForm::SymBilinearForm(Matrix matrix, ReductiveSplit s)
    : mat(std::move(matrix)), split(std::move(s)) {
  if (!mat.is_symmetric() || mat.rows() != split.m_dim())
    throw std::invalid_argument("form matrix must be symmetric of size dim m");
}

Rational SymBilinearForm::eval(const Vec& x, const Vec& y) const {
  return dot(x, mat.apply(y));
}

SymBilinearForm FormSpace::combination(const Vec& coeffs) const {
  if (coeffs.size() != basis.size()) throw std::invalid_argument("coefficient count mismatch");
  Matrix m = Matrix::zero(split.m_dim(), split.m_dim());
  for (std::size_t i = 0; i < basis.size(); ++i) m = m + basis[i] * coeffs[i];
  return SymBilinearForm(m, split);
}

namespace {

// Unknowns are the upper-triangle entries (i <= j) of a symmetric matrix.
std::size_t sym_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}

}  // namespace

FormSpace invariant_form_space(const ReductiveSplit& split,
                               const std::optional<Grading>& orthogonality) {
  const std::size_t m = split.m_dim();
  const std::size_t unknowns = m * (m + 1) / 2;
  std::vector<Vec> equations;

  // ad-invariance: for each Z in h and each pair (i <= j),
  //   sum_k c_i[k] B(k,j) + sum_k c_j[k] B(i,k) = 0
  // where [Z, Y_i] = sum_k c_i[k] Y_k (inside m by reductivity).
  for (std::size_t z = 0; z < split.h().dim(); ++z) {
    Vec z_vec = split.h().basis().row(z);
    std::vector<Vec> bracket_coords(m);
    for (std::size_t i = 0; i < m; ++i)
      bracket_coords[i] =
          split.m_coords(split.algebra().bracket(z_vec, split.m_basis().row(i)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        Vec eq = zero_vec(unknowns);
        for (std::size_t k = 0; k < m; ++k) {
          if (bracket_coords[i][k] != 0) eq[sym_index(k, j, m)] += bracket_coords[i][k];
          if (bracket_coords[j][k] != 0) eq[sym_index(i, k, m)] += bracket_coords[j][k];
        }
        if (!is_zero_vec(eq)) equations.push_back(std::move(eq));
      }
  }

  if (orthogonality) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (split.m_labels()[i] != split.m_labels()[j]) {
          Vec eq = zero_vec(unknowns);
          eq[sym_index(i, j, m)] = 1;
          equations.push_back(std::move(eq));
        }
  }

  Subspace solutions = equations.empty()
                           ? Subspace::full(unknowns)
                           : kernel(Matrix::from_rows(equations, unknowns));

  FormSpace space{split, {}};
  for (std::size_t r = 0; r < solutions.dim(); ++r) {
    Vec flat = solutions.basis().row(r);
    Matrix form(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) form(i, j) = form(j, i) = flat[sym_index(i, j, m)];
    space.basis.push_back(std::move(form));
  }
  return space;
}

Subspace common_radical(const FormSpace& fs) {
  const std::size_t m = fs.split.m_dim();
  if (fs.basis.empty()) return Subspace::full(m);
  Matrix stacked(0, m);
  for (const auto& b : fs.basis) stacked = stacked.vstack(b);
  return kernel(stacked);
}

std::string metric_kind_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::RiemannianZ2k: return "RiemannianZ2k";
    case MetricKind::LorentzianCaseI: return "LorentzianCaseI";
    case MetricKind::LorentzianCaseII: return "LorentzianCaseII";
    case MetricKind::PseudoRiemannian: return "PseudoRiemannian";
    case MetricKind::NoneDegenerate: return "NoneDegenerate";
  }
  return "?";
}

std::string MetricVerdict::to_string() const {
  std::ostringstream out;
  out << metric_kind_name(kind);
  if (kind == MetricKind::PseudoRiemannian)
    out << "(" << sig.positive << "," << sig.negative << ")";
  out << " sig=" << sig.to_string();
  return out.str();
}

MetricVerdict classify_metric(const SymBilinearForm& B, const Grading& G) {
  ReductiveSplit expected = reductive_split(G);
  if (!(B.split == expected))
    throw std::invalid_argument("classify_metric: form is not on the split of the grading");

  const std::size_t m = B.split.m_dim();
  MetricVerdict verdict;
  verdict.sig = signature(B.mat);

  std::vector<unsigned> labels = support(G);
  std::vector<unsigned> nontrivial;
  for (unsigned l : labels)
    if (l != 0) nontrivial.push_back(l);

  std::vector<unsigned> degenerate;
  for (unsigned l : nontrivial) {
    auto idx = B.split.label_block(l);
    Signature s = signature(B.mat.submatrix(idx, idx));
    verdict.component_signatures.emplace_back(l, s);
    if (s.null > 0) degenerate.push_back(l);
  }

  auto blocks_orthogonal = [&](unsigned a, unsigned b) {
    for (auto i : B.split.label_block(a))
      for (auto j : B.split.label_block(b))
        if (B.mat(i, j) != 0) return false;
    return true;
  };
  verdict.components_orthogonal = true;
  for (std::size_t a = 0; a < nontrivial.size(); ++a)
    for (std::size_t b = a + 1; b < nontrivial.size(); ++b)
      if (!blocks_orthogonal(nontrivial[a], nontrivial[b]))
        verdict.components_orthogonal = false;

  const bool non_degenerate = verdict.sig.null == 0;
  const bool positive_definite = verdict.sig == Signature{m, 0, 0};
  const bool lorentzian = m >= 1 && verdict.sig == Signature{m - 1, 1, 0};

  if (verdict.components_orthogonal && positive_definite && non_degenerate) {
    verdict.kind = MetricKind::RiemannianZ2k;
    return verdict;
  }
  if (verdict.components_orthogonal && lorentzian && degenerate.empty()) {
    verdict.kind = MetricKind::LorentzianCaseI;
    return verdict;
  }
  if (lorentzian && degenerate.size() == 1) {
    unsigned l0 = degenerate[0];
    verdict.degenerate_label = l0;
    bool others_ok = true;
    std::vector<unsigned> others;
    for (unsigned l : nontrivial)
      if (l != l0) others.push_back(l);
    for (std::size_t a = 0; a < others.size() && others_ok; ++a)
      for (std::size_t b = a + 1; b < others.size() && others_ok; ++b)
        others_ok = blocks_orthogonal(others[a], others[b]);
    if (others_ok) {
      // A second component lambda1 != lambda0 must pair with the degenerate
      // one with inertia (1,1); a single degenerate line cannot do it alone.
      for (unsigned l1 : others) {
        auto idx = B.split.label_block(l0);
        auto idx1 = B.split.label_block(l1);
        idx.insert(idx.end(), idx1.begin(), idx1.end());
        Signature s = signature(B.mat.submatrix(idx, idx));
        if (s.positive == 1 && s.negative == 1) {
          verdict.kind = MetricKind::LorentzianCaseII;
          return verdict;
        }
      }
    }
  }
  verdict.kind = non_degenerate ? MetricKind::PseudoRiemannian : MetricKind::NoneDegenerate;
  return verdict;
}

SymBilinearForm pullback(const Matrix& tau, const SymBilinearForm& B) {
  const ReductiveSplit& split = B.split;
  Matrix tau_m(split.m_dim(), split.m_dim());
  for (std::size_t j = 0; j < split.m_dim(); ++j) {
    Vec image = tau.apply(split.m_basis().row(j));
    if (!split.m().contains(image))
      throw std::invalid_argument("pullback: tau does not preserve m");
    Vec coords = split.m_coords(image);
    for (std::size_t i = 0; i < split.m_dim(); ++i) tau_m(i, j) = coords[i];
  }
  return SymBilinearForm(tau_m.transpose() * B.mat * tau_m, split);
}

RiemannianNormalForm riemannian_invariant_h3(const SymBilinearForm& B) {
  if (B.split.m_dim() != 3 || B.split.algebra().dim() != 3)
    throw std::invalid_argument("riemannian_invariant_h3 expects the 3-dimensional case");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (B.mat(i, j) != 0)
        throw std::invalid_argument("riemannian_invariant_h3 expects a diagonal form");
  Rational a1 = B.mat(0, 0), a2 = B.mat(1, 1), a3 = B.mat(2, 2);
  if (a1 <= 0 || a2 <= 0 || a3 <= 0)
    throw std::invalid_argument("riemannian_invariant_h3 expects a positive definite form");

  RiemannianNormalForm result{a3 / (a1 * a2), std::nullopt};
  auto r1 = rational_sqrt(a1);
  auto r2 = rational_sqrt(a2);
  if (r1 && r2) {
    Rational s = 1 / *r1, t = 1 / *r2;
    result.witness = Matrix::diagonal({s, t, s * t});
  }
  return result;
}

LorentzianNormalForm lorentzian_normal_form_h3(const SymBilinearForm& B, const Grading& G) {
  MetricVerdict verdict = classify_metric(B, G);
  if (B.split.m_dim() != 3)
    throw std::invalid_argument("lorentzian_normal_form_h3 expects the 3-dimensional case");

  if (verdict.kind == MetricKind::LorentzianCaseI) {
    Rational l1 = B.mat(0, 0), l2 = B.mat(1, 1), l3 = B.mat(2, 2);
    Rational lambda_sq = abs(l3) / (abs(l1) * abs(l2));
    if (l3 < 0)
      return {LorentzTag::NegOnCenter, lambda_sq, Matrix::diagonal({1, 1, -lambda_sq})};
    return {LorentzTag::NegOnPlane, lambda_sq, Matrix::diagonal({-1, 1, lambda_sq})};
  }
  if (verdict.kind == MetricKind::LorentzianCaseII) {
    // The reduction map is only known when the degenerate line is the
    // center component; other degenerate lines reduce to Case I instead.
    const unsigned center_label = 3;
    if (verdict.degenerate_label && *verdict.degenerate_label == center_label)
      return {LorentzTag::CaseII, std::nullopt,
              Matrix{{1, 0, 0}, {0, -1, 1}, {0, 1, 0}}};
    return {LorentzTag::ReducesToCaseI, std::nullopt, Matrix::zero(3, 3)};
  }
  throw std::invalid_argument("lorentzian_normal_form_h3: form is not Lorentzian here");
}

bool dual_change_check(const Rational& a3, const Rational& a5, const Rational& a6) {
  LieAlgebra h3 = heisenberg(1);
  FiniteGroupTable g7 = gamma7(a3, a5, a6);
  Grading grading = grading_from_involutions(h3, {g7.elements()[1], g7.elements()[2]});

  // One-dimensional simultaneous eigenlines; scale leading coordinate to 1.
  auto line = [&](unsigned bits) {
    const Subspace& comp = grading.component(bits);
    if (comp.dim() != 1) throw std::logic_error("expected one-dimensional component");
    Vec v = comp.basis().row(0);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    return scale(1 / v[lead], v);
  };
  Vec y1 = line(1);  // (-,+)
  Vec y2 = line(2);  // (+,-)
  Vec y3 = line(3);  // (-,-)

  Matrix p = Matrix::from_rows({y1, y2, y3}, 3).transpose();
  auto q = inverse(p);
  if (!q) return false;

  // Rows of p^{-1} are the dual forms of (Y1, Y2, Y3) in the w-basis.
  Matrix expected{{1, 0, 0},
                  {a3 / 2, 1, 0},
                  {-(a3 * a6 / 4) - a5 / 2, -a6 / 2, 1}};
  if (*q != expected) return false;
  return h3.is_automorphism(*q);
}

bool dual_change_check() {
  const std::vector<Rational> pool = {0, 1, -1, 2, Rational(1, 2), Rational(-3, 2)};
  for (const auto& a3 : pool)
    for (const auto& a5 : pool)
      for (const auto& a6 : pool)
        if (!dual_change_check(a3, a5, a6)) return false;
  return true;
}

}  // namespace heisym
