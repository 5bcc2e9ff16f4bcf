#ifndef POWMAT_MATRIX_HPP
#define POWMAT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "powmat/field.hpp"

namespace powmat {

/// Dense matrix over a finite field, stored column-major so that each column
/// is a contiguous coefficient vector.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Square matrix with ones on the antidiagonal: entry (i, n-1-i) = 1.
  static Matrix antidiagonal(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }

  std::span<const Elem> column(std::size_t j) const {
    return std::span<const Elem>(data_).subspan(j * rows_, rows_);
  }
  std::span<Elem> column(std::size_t j) { return std::span<Elem>(data_).subspan(j * rows_, rows_); }

  std::vector<Elem> row(std::size_t i) const;

  bool is_identity() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<Elem> matvec(const Matrix& a, std::span<const Elem> v);
/// Square-and-multiply; k = 0 gives the identity.
Matrix matrix_power(const Matrix& a, std::uint64_t k);
Matrix transpose(const Matrix& a);
/// a - lambda * I for square a.
Matrix shift_diagonal(const Matrix& a, Elem lambda);

/// Rank by Gaussian elimination, pivoting on the first nonzero entry.
std::size_t rank(const Matrix& a);

/// Coefficients c_0..c_n (low degree first, monic) of det(lambda I - A),
/// computed with the division-free Berkowitz recurrence.
std::vector<Elem> char_poly(const Matrix& a);

/// Roots of a polynomial over its field with multiplicity, by exhaustive
/// evaluation and synthetic division. Listed ascending, repeated.
std::vector<Elem> roots_with_multiplicity(const FieldCtx& field, std::vector<Elem> coeffs_low_first);

}  // namespace powmat

#endif  // POWMAT_MATRIX_HPP
