#ifndef POWMAT_CENSUS_HPP
#define POWMAT_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powmat/matrix.hpp"
#include "powmat/poly.hpp"

namespace powmat {

struct ValueCensus {
  std::size_t size = 0;
  /// multiplicity[c] = #{a : f(a) = c}, indexed by canonical encoding.
  std::vector<std::size_t> multiplicity;
};

ValueCensus census_brute(const ReducedPoly& f);

/// |V_f| as rank A(f).
std::size_t value_set_size_via_rank(const ReducedPoly& f);

/// (q-1) x (q-1) left circulant built from h = (a_0 + a_{q-1} - c) + a_1 x + ... + a_{q-2} x^{q-2}:
/// entry (r, j) is the first-row entry at (r + j) mod (q-1).
Matrix circulant_for_value(const ReducedPoly& f, Elem c);

struct KonigRadosCount {
  std::size_t circulant_rank = 0;
  /// q - 1 - rank = #{a != 0 : f(a) = c}.
  std::size_t nonzero_solutions = 0;
  /// nonzero_solutions + [f(0) = c].
  std::size_t multiplicity = 0;
};

KonigRadosCount konig_rados_count(const ReducedPoly& f, Elem c);

/// For c != f(0): c lies in V_f iff the circulant is rank deficient.
bool konig_rados_in_value_set(const ReducedPoly& f, Elem c);

struct MinimumValueSetReport {
  std::size_t degree = 0;
  std::size_t rank = 0;
  std::size_t lower_bound = 0;  // floor((q-1)/d) + 1
  bool lower_bound_holds = false;
  bool is_minimum_value_set = false;
};

/// Throws DegreeZero for constants (including f_0).
MinimumValueSetReport minimum_value_set_check(const ReducedPoly& f);

struct GapStatistic {
  /// l_i for rows 1..q-1 of A(f) restricted to columns 1..q-1.
  std::vector<std::size_t> row_gaps;
  std::size_t max_gap = 0;  // L_f
};

/// Longest circular run of zeros; 0 if the row is all zeros or all ones.
std::size_t circular_zero_run(std::span<const Elem> row);

GapStatistic gap_statistic(const Matrix& a);

struct GapBoundProbe {
  GapStatistic gaps;
  std::size_t value_set_size = 0;
  std::size_t bound = 0;  // L_f + 2
  bool holds = false;
};

/// Computes L_f and checks |V_f| >= L_f + 2 against the census. The bound is
/// reported, not enforced: known counterexamples exist for the transcription used here.
GapBoundProbe das_mullen_bound(const ReducedPoly& f);

/// f(bx + a) = b f(x) + a decided from the closed-form coefficient equations.
/// b must be nonzero (InvalidArgument otherwise).
bool commutes_with_linear(const ReducedPoly& f, Elem a, Elem b);
/// Same question decided pointwise on all of F_q.
bool commutes_with_linear_pointwise(const ReducedPoly& f, Elem a, Elem b);
/// Same question decided by A(bx+a) A(f) = A(f) A(bx+a).
bool commutes_with_linear_matrix(const ReducedPoly& f, Elem a, Elem b);

}  // namespace powmat

#endif  // POWMAT_CENSUS_HPP
