#ifndef HEISYM_METRICS_HPP
#define HEISYM_METRICS_HPP

#include "heisym/grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heisym {

/// Reductive decomposition g = h + m induced by a grading: h is the
/// identity component, m the sum of the others. m_basis rows are the
/// concatenated component bases in label order and carry their labels, so
/// forms and connections can be written in m-coordinates.
class ReductiveSplit {
 public:
  ReductiveSplit(LieAlgebra algebra, unsigned k, Subspace h, Matrix m_basis,
                 std::vector<unsigned> m_labels);

  const LieAlgebra& algebra() const { return algebra_; }
  unsigned grading_rank() const { return k_; }
  const Subspace& h() const { return h_; }
  const Subspace& m() const { return m_space_; }
  const Matrix& m_basis() const { return m_basis_; }
  const std::vector<unsigned>& m_labels() const { return m_labels_; }
  std::size_t m_dim() const { return m_basis_.rows(); }

  /// Unique decomposition v = h_part + m_part; coordinates relative to the
  /// h basis rows and m_basis rows.
  Vec h_coords(const Vec& ambient) const;
  Vec m_coords_of_projection(const Vec& ambient) const;
  /// m-coordinates of a vector that must lie in m (throws otherwise).
  Vec m_coords(const Vec& ambient) const;
  Vec ambient_from_m(const Vec& m_coords) const;
  Vec ambient_from_h(const Vec& h_coords) const;

  /// m-coordinate indices carrying the given label.
  std::vector<std::size_t> label_block(unsigned label) const;

  bool operator==(const ReductiveSplit& other) const;

 private:
  LieAlgebra algebra_;
  unsigned k_;
  Subspace h_;
  Subspace m_space_;
  Matrix m_basis_;
  std::vector<unsigned> m_labels_;
  Matrix decomp_inverse_;  // inverse of [h_basis^T | m_basis^T]
};

/// Throws when the grading is invalid or the reductive inclusions
/// [h,h] c h, [h,m] c m fail.
ReductiveSplit reductive_split(const Grading& g);

/// Symmetric bilinear form on m, written in m_basis coordinates.
struct SymBilinearForm {
  Matrix mat;
  ReductiveSplit split;

  SymBilinearForm(Matrix matrix, ReductiveSplit s);
  Rational eval(const Vec& m_coords_x, const Vec& m_coords_y) const;
};

/// Basis of a linear space of symmetric forms on a common split.
struct FormSpace {
  ReductiveSplit split;
  std::vector<Matrix> basis;

  std::size_t dimension() const { return basis.size(); }
  SymBilinearForm combination(const Vec& coeffs) const;
};

/// Solves the ad-invariance equations B([Z,X],Y) + B(X,[Z,Y]) = 0 over
/// symmetric matrices, for Z running over a basis of h. When a grading is
/// supplied, distinct non-identity components are additionally forced
/// orthogonal. The result spans all solutions.
FormSpace invariant_form_space(const ReductiveSplit& split,
                               const std::optional<Grading>& orthogonality = std::nullopt);

/// Vectors of m annihilated by every form in the space; a nonzero radical
/// proves every member degenerate. Returned in m-coordinates.
Subspace common_radical(const FormSpace& fs);

enum class MetricKind {
  RiemannianZ2k,
  LorentzianCaseI,
  LorentzianCaseII,
  PseudoRiemannian,
  NoneDegenerate
};
std::string metric_kind_name(MetricKind kind);

struct MetricVerdict {
  MetricKind kind;
  Signature sig;  // of the whole form on m
  std::vector<std::pair<unsigned, Signature>> component_signatures;
  bool components_orthogonal = false;  // all distinct non-identity pairs
  std::optional<unsigned> degenerate_label;
  std::string to_string() const;
};

MetricVerdict classify_metric(const SymBilinearForm& B, const Grading& G);

/// (x,y) -> B(tau x, tau y); tau must preserve m.
SymBilinearForm pullback(const Matrix& tau, const SymBilinearForm& B);

struct RiemannianNormalForm {
  Rational lambda_sq;              // normal form omega1^2 + omega2^2 + lambda^2 omega3^2
  std::optional<Matrix> witness;   // diagonal automorphism realizing it, when rational
};

/// Diagonal positive definite forms on the h3 grading with 1-dimensional
/// components: diag(a1,a2,a3) has invariant lambda^2 = a3/(a1*a2).
RiemannianNormalForm riemannian_invariant_h3(const SymBilinearForm& B);

/// ReducesToCaseI marks a degenerate non-center component: such a form is
/// isometric to a Case I form, but the reducing automorphism is not
/// produced here.
enum class LorentzTag { NegOnPlane, NegOnCenter, CaseII, ReducesToCaseI };

struct LorentzianNormalForm {
  LorentzTag tag;
  std::optional<Rational> lambda_sq;
  Matrix canonical;  // normal-form matrix in m-coordinates
};

LorentzianNormalForm lorentzian_normal_form_h3(const SymBilinearForm& B, const Grading& G);

/// Verifies for one parameter triple that the simultaneous eigenbasis
/// (Y1, Y2, Y3) of the parametrized Klein four-group of h3 has the dual
/// basis theta1 = w1, theta2 = w2 + (a3/2) w1,
/// theta3 = w3 - (a6/2) w2 - (a3 a6/4 + a5/2) w1, and that the
/// coordinate-change matrix is an automorphism of h3.
bool dual_change_check(const Rational& a3, const Rational& a5, const Rational& a6);
/// Same check over a fixed sample grid.
bool dual_change_check();

}  // namespace heisym

#endif
