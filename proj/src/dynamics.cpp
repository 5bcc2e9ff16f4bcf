#include "powmat/dynamics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "powmat/power_matrix.hpp"

namespace powmat {

FunctionalGraph build_graph(const ReducedPoly& f) {
  FunctionalGraph g{f.field(), value_table(f), {}};
  const std::size_t q = f.size();
  constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);
  g.tail_length.assign(q, kUnknown);
  std::vector<std::size_t> stamp(q, kUnknown);  // walk id that first reached a node

  for (std::size_t start = 0; start < q; ++start) {
    if (g.tail_length[start] != kUnknown) continue;
    std::vector<std::size_t> path;
    std::size_t x = start;
    while (g.tail_length[x] == kUnknown && stamp[x] != start) {
      stamp[x] = start;
      path.push_back(x);
      x = g.successor[x].value;
    }
    std::size_t resolved = path.size();
    if (g.tail_length[x] == kUnknown) {
      // x closed a new cycle inside this walk.
      const auto it = std::find(path.begin(), path.end(), x);
      for (auto c = it; c != path.end(); ++c) g.tail_length[*c] = 0;
      resolved = static_cast<std::size_t>(it - path.begin());
    }
    for (std::size_t k = resolved; k-- > 0;) {
      g.tail_length[path[k]] = g.tail_length[g.successor[path[k]].value] + 1;
    }
  }
  return g;
}

std::vector<std::size_t> CycleDecomposition::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.size());
  return out;
}

CycleDecomposition cycle_decomposition(const FunctionalGraph& g) {
  CycleDecomposition dec;
  std::vector<bool> taken(g.successor.size(), false);
  for (std::size_t a = 0; a < g.successor.size(); ++a) {
    if (g.tail_length[a] == 1) dec.leaves.push_back(Elem{static_cast<std::uint32_t>(a)});
    if (g.tail_length[a] != 0 || taken[a]) continue;
    std::vector<Elem> cycle;
    std::size_t x = a;
    do {
      taken[x] = true;
      cycle.push_back(Elem{static_cast<std::uint32_t>(x)});
      x = g.successor[x].value;
    } while (x != a);
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

SequenceAnalysis sequence_period(const ReducedPoly& f, Elem seed) {
  const FunctionalGraph g = build_graph(f);
  SequenceAnalysis s{seed, g.tail_length.at(seed.value), 0};
  Elem x = seed;
  for (std::size_t k = 0; k < s.preperiod; ++k) x = g.successor[x.value];
  Elem y = x;
  do {
    y = g.successor[y.value];
    ++s.period;
  } while (y != x);
  return s;
}

SequenceAnalysis sequence_period_direct(const ReducedPoly& f, Elem seed) {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_visit(f.size(), kUnseen);
  Elem x = seed;
  for (std::size_t n = 0;; ++n) {
    if (first_visit[x.value] != kUnseen) {
      return SequenceAnalysis{seed, first_visit[x.value], n - first_visit[x.value]};
    }
    first_visit[x.value] = n;
    x = evaluate(f, x);
  }
}

namespace {

void require_permutation(const ReducedPoly& f) {
  if (!is_permutation_by_values(f)) {
    throw Error(ErrorKind::NotPermutation, "polynomial does not permute the field");
  }
}

}  // namespace

std::uint64_t global_period(const ReducedPoly& f) {
  require_permutation(f);
  std::uint64_t k = 1;
  for (std::size_t len : cycle_decomposition(build_graph(f)).lengths()) k = lcm_u64(k, len);
  if (!matrix_power(build_direct(f), k).is_identity()) {
    throw std::logic_error("A(f)^K != I for the lcm K of the cycle lengths");
  }
  return k;
}

std::uint64_t matrix_order(const ReducedPoly& f) {
  const std::uint64_t k = global_period(f);
  const Matrix a = build_direct(f);
  std::uint64_t t = k;
  for (std::uint64_t r : prime_factors(k)) {
    while (t % r == 0 && matrix_power(a, t / r).is_identity()) t /= r;
  }
  return t;
}

CycleExtension extension_for_cycles(const Field& field, const CycleDecomposition& dec) {
  std::uint64_t L = 1;
  for (std::size_t len : dec.lengths()) {
    if (len % field->p() == 0) {
      throw Error(ErrorKind::PCharObstruction,
                  "cycle of length " + std::to_string(len) + " is divisible by the characteristic " +
                      std::to_string(field->p()));
    }
    L = lcm_u64(L, len);
  }
  const auto m = multiplicative_order_mod(field->q() % L, L);
  if (m > 64) throw Error(ErrorKind::SizeLimit, "extension degree " + std::to_string(m) + " too large");
  return CycleExtension{L, static_cast<std::uint32_t>(m),
                        extension_of(field, static_cast<std::uint32_t>(m))};
}

std::vector<Elem> Diagonalization::eigenvalues() const {
  std::vector<Elem> out;
  out.reserve(eigenpairs.size());
  for (const auto& e : eigenpairs) out.push_back(e.eigenvalue);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool has_zero_residual(const Matrix& a, const Eigenpair& e) {
  const FieldCtx& K = *a.field();
  const auto image = matvec(a, e.vector);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != K.mul(e.eigenvalue, e.vector[i])) return false;
  }
  return true;
}

}  // namespace

Diagonalization diagonalize(const ReducedPoly& f) {
  const FunctionalGraph graph = build_graph(f);
  for (std::size_t a = 0; a < graph.tail_length.size(); ++a) {
    if (graph.tail_length[a] >= 2) {
      throw Error(ErrorKind::NotDiagonalizableInput,
                  "element " + std::to_string(a) + " has tail length " +
                      std::to_string(graph.tail_length[a]));
    }
  }
  const CycleDecomposition dec = cycle_decomposition(graph);
  CycleExtension ext = extension_for_cycles(f.field(), dec);
  const Field K = ext.embedding.ext;
  const std::uint32_t q = f.field()->q();

  Matrix a_k(K, q, q);
  {
    const Matrix a = build_direct(f);
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t i = 0; i < q; ++i) a_k(i, j) = ext.embedding(a(i, j));
    }
  }
  std::vector<Elem> points(q);
  for (std::uint32_t x = 0; x < q; ++x) points[x] = ext.embedding(Elem{x});

  // Position of each cycle element: (cycle index, t).
  std::vector<std::pair<std::size_t, std::size_t>> position(q, {0, 0});
  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    for (std::size_t t = 0; t < dec.cycles[i].size(); ++t) position[dec.cycles[i][t].value] = {i, t};
  }

  Diagonalization diag{f.field(), std::move(ext), {}, {}, std::move(a_k), false};
  const Elem gamma = K->generator();
  const std::uint64_t group = K->q() - 1;

  for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
    const auto& cycle = dec.cycles[i];
    const std::size_t len = cycle.size();
    const Elem psi = K->pow(gamma, group / len);
    diag.roots.push_back(psi);
    for (std::size_t j = 0; j < len; ++j) {
      const Elem lambda = K->pow(psi, j);
      std::vector<Elem> values(q, K->zero());
      for (std::size_t t = 0; t < len; ++t) values[cycle[t].value] = K->pow(lambda, t);
      // A leaf d with f(d) = b_t needs g(d) = lambda^{t-1} so that g(f(d)) = lambda g(d).
      for (Elem d : dec.leaves) {
        const auto [ci, t] = position[graph.successor[d.value].value];
        if (ci == i) values[d.value] = K->pow(lambda, (t + len - 1) % len);
      }
      diag.eigenpairs.push_back(
          Eigenpair{lambda, interpolate_on_subfield(*K, q, points, values), i, j, false});
    }
  }
  for (std::size_t l = 0; l < dec.leaves.size(); ++l) {
    std::vector<Elem> values(q, K->zero());
    values[dec.leaves[l].value] = K->one();
    diag.eigenpairs.push_back(
        Eigenpair{K->zero(), interpolate_on_subfield(*K, q, points, values), l, 0, true});
  }

  for (const auto& e : diag.eigenpairs) {
    if (!has_zero_residual(diag.embedded_matrix, e)) {
      throw std::logic_error("constructed eigenvector has a nonzero residual");
    }
  }
  Matrix basis(K, q, diag.eigenpairs.size());
  for (std::size_t c = 0; c < diag.eigenpairs.size(); ++c) {
    std::copy(diag.eigenpairs[c].vector.begin(), diag.eigenpairs[c].vector.end(),
              basis.column(c).begin());
  }
  diag.diagonalizable = diag.eigenpairs.size() == q && rank(basis) == q;
  return diag;
}

bool eigen_residual_check(const Diagonalization& diag) {
  const Matrix& a = diag.embedded_matrix;
  const Field& K = a.field();
  std::map<Elem, std::vector<const Eigenpair*>> by_value;
  for (const auto& e : diag.eigenpairs) {
    if (e.vector.size() != a.rows() || !has_zero_residual(a, e)) return false;
    by_value[e.eigenvalue].push_back(&e);
  }
  for (const auto& [lambda, pairs] : by_value) {
    Matrix span_m(K, a.rows(), pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      std::copy(pairs[c]->vector.begin(), pairs[c]->vector.end(), span_m.column(c).begin());
    }
    const std::size_t eigenspace_dim = a.rows() - rank(shift_diagonal(a, lambda));
    if (rank(span_m) != eigenspace_dim) return false;
  }
  return true;
}

}  // namespace powmat
