#ifndef POWMAT_DYNAMICS_HPP
#define POWMAT_DYNAMICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powmat/field.hpp"
#include "powmat/matrix.hpp"
#include "powmat/poly.hpp"

namespace powmat {

/// Functional graph a -> f(a) on F_q.
struct FunctionalGraph {
  Field field;
  std::vector<Elem> successor;
  /// Steps from a to the first element lying on a cycle (0 on cycles).
  std::vector<std::size_t> tail_length;

  bool on_cycle(Elem a) const { return tail_length.at(a.value) == 0; }
};

FunctionalGraph build_graph(const ReducedPoly& f);

struct CycleDecomposition {
  /// Each cycle starts at its smallest element; f(b_t) = b_{t+1 mod L}.
  /// Cycles are ordered by their starting element.
  std::vector<std::vector<Elem>> cycles;
  /// Elements at tail length exactly 1.
  std::vector<Elem> leaves;

  std::vector<std::size_t> lengths() const;
};

CycleDecomposition cycle_decomposition(const FunctionalGraph& g);

struct SequenceAnalysis {
  Elem seed;
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

/// Period of a_n = f^{(n)}(a_0), read from the functional graph.
SequenceAnalysis sequence_period(const ReducedPoly& f, Elem seed);
/// Same, by iterating and recording first-visit indices.
SequenceAnalysis sequence_period_direct(const ReducedPoly& f, Elem seed);

/// lcm of the cycle lengths of a permutation polynomial; verifies A(f)^K = I.
std::uint64_t global_period(const ReducedPoly& f);

/// Smallest t >= 1 with A(f)^t = I, found by descending through the divisors of
/// the global period.
std::uint64_t matrix_order(const ReducedPoly& f);

struct CycleExtension {
  std::uint64_t lcm_length = 1;  // L
  std::uint32_t degree = 1;      // m, the order of q modulo L
  Embedding embedding;
};

/// Smallest extension containing primitive L_i-th roots of unity for all
/// cycle lengths. PCharObstruction when p divides a cycle length.
CycleExtension extension_for_cycles(const Field& field, const CycleDecomposition& dec);

struct Eigenpair {
  Elem eigenvalue;             // in K
  std::vector<Elem> vector;    // q coefficients in K
  std::size_t cycle = 0;       // index into the decomposition, or leaf index
  std::size_t exponent = 0;    // j in psi^j; unused for leaves
  bool leaf = false;
};

struct Diagonalization {
  Field base;
  CycleExtension extension;
  std::vector<Elem> roots;  // psi_i, one per cycle
  std::vector<Eigenpair> eigenpairs;
  /// A(f) with every entry mapped into K.
  Matrix embedded_matrix;
  bool diagonalizable = false;

  /// Eigenvalues (canonical encoding in K), sorted ascending.
  std::vector<Elem> eigenvalues() const;
};

/// Eigenbasis indexed by cycles (and leaves, when every tail has length <= 1).
/// NotDiagonalizableInput when some tail length is >= 2.
Diagonalization diagonalize(const ReducedPoly& f);

/// Zero residuals and, for every eigenvalue, the stored vectors span the full eigenspace.
bool eigen_residual_check(const Diagonalization& diag);

}  // namespace powmat

#endif  // POWMAT_DYNAMICS_HPP
