#include "heisym/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace heisym {

namespace {

// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    Rational inv = Rational(1) / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

Matrix drop_zero_rows(const Matrix& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec r = m.row(i);
    if (!is_zero_vec(r)) rows.push_back(std::move(r));
  }
  return Matrix::from_rows(rows, m.cols());
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix r = m;
  rref_in_place(r);
  return r;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return rref_in_place(r).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse needs a square matrix");
  std::size_t n = m.rows();
  Matrix aug = m.hstack(Matrix::identity(n));
  auto pivots = rref_in_place(aug);
  // All pivots must land in the left block; a singular left block pushes
  // pivots into the appended identity.
  if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
  std::vector<std::size_t> all_rows, right_cols;
  for (std::size_t i = 0; i < n; ++i) {
    all_rows.push_back(i);
    right_cols.push_back(n + i);
  }
  return aug.submatrix(all_rows, right_cols);
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(0, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return row_space(Matrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& m) {
  return Subspace(m.cols(), drop_zero_rows(rref(m)));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
  if (is_zero_vec(v)) return true;
  Matrix stacked = basis_.vstack(Matrix::from_rows({v}, ambient_dim_));
  return rank(stacked) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_)
    throw std::invalid_argument("ambient dimension mismatch");
  Matrix stacked = basis_.vstack(other.basis_);
  return rank(stacked) == dim();
}

std::string Subspace::to_string() const {
  if (dim() == 0) return "{0}";
  std::ostringstream out;
  out << "span{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << vec_to_string(basis_.row(i));
  }
  out << "}";
  return out.str();
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = zero_vec(m.cols());
    v[free_col] = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r(pr, free_col);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  // u ∩ v = (u° + v°)° with ° the dot-product complement, which is exact
  // over Q: kernel(basis) computes ° and the pairing is non-degenerate.
  Subspace u_ann = kernel(u.basis());
  Subspace v_ann = kernel(v.basis());
  Matrix stacked = u_ann.basis().vstack(v_ann.basis());
  if (stacked.rows() == 0) return Subspace::full(u.ambient_dim());
  return kernel(stacked);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  return Subspace::row_space(u.basis().vstack(v.basis()));
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug = a.hstack(Matrix::from_rows({b}, b.size()).transpose());
  auto pivots = rref_in_place(aug);
  // A pivot in the appended column marks an inconsistent row.
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec particular = zero_vec(a.cols());
  for (std::size_t pr = 0; pr < pivots.size(); ++pr)
    particular[pivots[pr]] = aug(pr, a.cols());
  return AffineSolution{std::move(particular), kernel(a)};
}

CongruenceResult congruence_diagonalize(const Matrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
  std::size_t n = s.rows();
  Matrix d = s;
  Matrix p = Matrix::identity(n);

  // Paired row/column operations keep d = p^T s p at every step.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) d(dst, j) += f * d(src, j);
    for (std::size_t i = 0; i < n; ++i) d(i, dst) += f * d(i, src);
    for (std::size_t i = 0; i < n; ++i) p(i, dst) += f * p(i, src);
  };
  auto swap_indices = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(p(i, a), p(i, b));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) == 0) {
      std::size_t diag = i;
      while (diag < n && d(diag, diag) == 0) ++diag;
      if (diag < n) {
        swap_indices(i, diag);
      } else {
        std::size_t off = i + 1;
        while (off < n && d(i, off) == 0) ++off;
        if (off == n) continue;  // row and column already clear
        add_multiple(i, off, 1);  // now d(i,i) = 2 s_ij != 0
      }
    }
    Rational pivot = d(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d(j, i) == 0) continue;
      add_multiple(j, i, -d(j, i) / pivot);
    }
  }
  return CongruenceResult{std::move(d), std::move(p)};
}

std::string Signature::to_string() const {
  std::ostringstream out;
  out << "(" << positive << "," << negative << "," << null << ")";
  return out.str();
}

Signature signature(const Matrix& s) {
  CongruenceResult res = congruence_diagonalize(s);
  Signature sig;
  for (std::size_t i = 0; i < res.d.rows(); ++i) {
    if (res.d(i, i) > 0)
      ++sig.positive;
    else if (res.d(i, i) < 0)
      ++sig.negative;
    else
      ++sig.null;
  }
  return sig;
}

}  // namespace heisym
