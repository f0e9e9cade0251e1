#ifndef HEISYM_MATRIX_HPP
#define HEISYM_MATRIX_HPP

#include "heisym/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace heisym {

using Vec = std::vector<Rational>;

bool is_zero_vec(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

/// Dense matrix of exact rationals. Small and immutable in spirit: every
/// operation returns a fresh value.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix diagonal(const Vec& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator*(const Rational& c) const;
  Matrix operator-() const;
  Vec apply(const Vec& v) const;  // matrix times column vector

  Matrix transpose() const;
  Matrix pow(std::size_t e) const;  // square matrices only

  bool operator==(const Matrix& other) const = default;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  /// Stacks other below this matrix (same column count).
  Matrix vstack(const Matrix& other) const;
  /// Appends other to the right (same row count).
  Matrix hstack(const Matrix& other) const;
  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace heisym

#endif
