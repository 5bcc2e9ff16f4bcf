#ifndef POWMAT_POWER_MATRIX_HPP
#define POWMAT_POWER_MATRIX_HPP

#include "powmat/matrix.hpp"
#include "powmat/poly.hpp"

namespace powmat {

// A(f) is the q x q matrix whose column k holds the coefficients of f^k mod
// x^q - x, rows indexed by the power of x (0-based on both axes). Column 0 is
// e_0 for f != f_0 and A(f_0) is the zero matrix.

/// Column k = power_reduced(f, k).
Matrix build_direct(const ReducedPoly& f);

/// Entry-wise closed form: a_{0k} = f(0)^k and, for i >= 1,
/// a_{ik} = -C(q-1, i) sum_a f(a)^k (-a)^{q-1-i}. Columns are filled
/// independently (in parallel for large q).
Matrix build_interpolation(const ReducedPoly& f);

/// A(f) v_g, i.e. the coefficients of g o f.
ReducedPoly apply_to_vector(const Matrix& a, const ReducedPoly& g);

/// Reads column k back as a reduced polynomial.
ReducedPoly column_poly(const Matrix& a, std::size_t k);

/// Last row is (0, ..., 0, 1): zero in columns 1..q-2 and 1 in column q-1.
bool hermite_last_row(const Matrix& a);

/// P A P with P the antidiagonal permutation (reverses rows and columns).
Matrix antidiagonal_conjugate(const Matrix& a);

/// P A^T P: entry (i, k) is a_{q-1-k, q-1-i}.
Matrix antidiagonal_reflect_transpose(const Matrix& a);

/// A(f^{(-1)}) for a permutation matrix A = A(f), computed as P A^T P.
/// Throws NotPermutation when the last-row test fails.
Matrix inverse_via_conjugation(const Matrix& a);

/// Whether (P A)^2 = I. Throws NotPermutation when the last-row test fails.
bool involution_check(const Matrix& a);

/// Brute-force bijectivity of f on F_q.
bool is_permutation_by_values(const ReducedPoly& f);

}  // namespace powmat

#endif  // POWMAT_POWER_MATRIX_HPP
