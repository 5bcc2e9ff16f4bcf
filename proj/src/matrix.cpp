#include "powmat/matrix.hpp"

#include <algorithm>
#include <string>

#include "powmat/poly.hpp"

namespace powmat {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
  return m;
}

Matrix Matrix::antidiagonal(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = field->one();
  return m;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
  std::vector<Elem> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, j).value != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.value == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same_field(*b.field_) &&
         a.data_ == b.data_;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(*a.field(), *b.field());
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::InvalidArgument, "matrix dimensions do not match");
  }
  const FieldCtx& F = *a.field();
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto out = c.column(j);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem bkj = b(k, j);
      if (bkj.value == 0) continue;
      const auto acol = a.column(k);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        if (acol[i].value != 0) out[i] = F.add(out[i], F.mul(acol[i], bkj));
      }
    }
  }
  return c;
}

std::vector<Elem> matvec(const Matrix& a, std::span<const Elem> v) {
  if (v.size() != a.cols()) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  const FieldCtx& F = *a.field();
  std::vector<Elem> out(a.rows(), F.zero());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (v[k].value == 0) continue;
    const auto col = a.column(k);
    for (std::size_t i = 0; i < a.rows(); ++i) out[i] = F.add(out[i], F.mul(col[i], v[k]));
  }
  return out;
}

Matrix matrix_power(const Matrix& a, std::uint64_t k) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "matrix power needs a square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = matmul(result, base);
    if (k > 1) base = matmul(base, base);
  }
  return result;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
  }
  return t;
}

Matrix shift_diagonal(const Matrix& a, Elem lambda) {
  Matrix out = a;
  const FieldCtx& F = *a.field();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) out(i, i) = F.sub(out(i, i), lambda);
  return out;
}

std::size_t rank(const Matrix& a) {
  const FieldCtx& F = *a.field();
  // Row-major working copy.
  std::vector<std::vector<Elem>> m(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) m[i] = a.row(i);
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && m[pivot][col].value == 0) ++pivot;
    if (pivot == a.rows()) continue;
    std::swap(m[r], m[pivot]);
    const Elem inv = F.inv(m[r][col]);
    for (std::size_t j = col; j < a.cols(); ++j) m[r][j] = F.mul(m[r][j], inv);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Elem factor = m[i][col];
      if (factor.value == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        m[i][j] = F.sub(m[i][j], F.mul(factor, m[r][j]));
      }
    }
    ++r;
  }
  return r;
}

std::vector<Elem> char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::InvalidArgument, "char_poly needs a square matrix");
  const FieldCtx& F = *a.field();
  const std::size_t n = a.rows();
  std::vector<Elem> c{F.one()};  // high degree first
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t s = r - 1;  // index of the new row/column
    // First column of the Toeplitz factor: 1, -a_ss, -R S, -R A' S, ...
    std::vector<Elem> t(r + 1, F.zero());
    t[0] = F.one();
    t[1] = F.neg(a(s, s));
    std::vector<Elem> v(s);
    for (std::size_t i = 0; i < s; ++i) v[i] = a(i, s);
    for (std::size_t k = 0; k + 2 <= r; ++k) {
      Elem dot = F.zero();
      for (std::size_t i = 0; i < s; ++i) dot = F.add(dot, F.mul(a(s, i), v[i]));
      t[k + 2] = F.neg(dot);
      std::vector<Elem> next(s, F.zero());
      for (std::size_t j = 0; j < s; ++j) {
        if (v[j].value == 0) continue;
        for (std::size_t i = 0; i < s; ++i) next[i] = F.add(next[i], F.mul(a(i, j), v[j]));
      }
      v = std::move(next);
    }
    std::vector<Elem> next_c(r + 1, F.zero());
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) {
        next_c[i] = F.add(next_c[i], F.mul(t[i - j], c[j]));
      }
    }
    c = std::move(next_c);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

std::vector<Elem> roots_with_multiplicity(const FieldCtx& field, std::vector<Elem> coeffs) {
  while (!coeffs.empty() && coeffs.back().value == 0) coeffs.pop_back();
  std::vector<Elem> roots;
  if (coeffs.size() < 2) return roots;
  for (std::uint32_t x = 0; x < field.q() && coeffs.size() >= 2; ++x) {
    const Elem r{x};
    for (;;) {
      // Synthetic division by (lambda - r); remainder is the value at r.
      std::vector<Elem> quotient(coeffs.size() - 1);
      Elem carry = field.zero();
      for (std::size_t i = coeffs.size(); i-- > 1;) {
        carry = field.add(field.mul(carry, r), coeffs[i]);
        quotient[i - 1] = carry;
      }
      const Elem remainder = field.add(field.mul(carry, r), coeffs[0]);
      if (remainder.value != 0) break;
      roots.push_back(r);
      coeffs = std::move(quotient);
      if (coeffs.size() < 2) break;
    }
  }
  return roots;
}

}  // namespace powmat
