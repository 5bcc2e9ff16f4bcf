#include "powmat/census.hpp"

#include <algorithm>

#include "powmat/power_matrix.hpp"

namespace powmat {

namespace {

// C(t, s) mod p by Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t t, std::uint64_t s, std::uint32_t p) {
  std::uint64_t result = 1;
  while (t > 0 || s > 0) {
    const std::uint64_t td = t % p, sd = s % p;
    if (sd > td) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < sd; ++i) {
      num = num * ((td - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    std::uint64_t inv = 1, base = den;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    result = result * num % p * inv % p;
    t /= p;
    s /= p;
  }
  return static_cast<std::uint32_t>(result);
}

ReducedPoly linear_poly(const Field& field, Elem a, Elem b) {
  std::vector<Elem> c(field->q(), field->zero());
  c[0] = a;
  c[1] = b;
  return ReducedPoly(field, std::move(c));
}

}  // namespace

ValueCensus census_brute(const ReducedPoly& f) {
  ValueCensus census;
  census.multiplicity.assign(f.size(), 0);
  for (Elem v : value_table(f)) ++census.multiplicity[v.value];
  census.size = static_cast<std::size_t>(std::count_if(
      census.multiplicity.begin(), census.multiplicity.end(), [](std::size_t m) { return m > 0; }));
  return census;
}

std::size_t value_set_size_via_rank(const ReducedPoly& f) { return rank(build_direct(f)); }

Matrix circulant_for_value(const ReducedPoly& f, Elem c) {
  const FieldCtx& F = *f.field();
  const std::size_t n = F.q() - 1;
  std::vector<Elem> h(n);
  h[0] = F.sub(F.add(f[0], f[n]), c);
  for (std::size_t i = 1; i < n; ++i) h[i] = f[i];
  Matrix m(f.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) m(r, j) = h[(r + j) % n];
  }
  return m;
}

KonigRadosCount konig_rados_count(const ReducedPoly& f, Elem c) {
  KonigRadosCount out;
  out.circulant_rank = rank(circulant_for_value(f, c));
  out.nonzero_solutions = f.size() - 1 - out.circulant_rank;
  out.multiplicity = out.nonzero_solutions + (f[0] == c ? 1 : 0);
  return out;
}

bool konig_rados_in_value_set(const ReducedPoly& f, Elem c) {
  if (f[0] == c) return true;
  return rank(circulant_for_value(f, c)) < f.size() - 1;
}

MinimumValueSetReport minimum_value_set_check(const ReducedPoly& f) {
  const auto d = f.degree();
  if (!d || *d == 0) {
    throw Error(ErrorKind::DegreeZero, "minimum value set test needs a nonconstant polynomial");
  }
  MinimumValueSetReport r;
  r.degree = *d;
  r.rank = value_set_size_via_rank(f);
  r.lower_bound = (f.size() - 1) / r.degree + 1;
  r.lower_bound_holds = r.rank >= r.lower_bound;
  r.is_minimum_value_set = r.rank == r.lower_bound;
  return r;
}

std::size_t circular_zero_run(std::span<const Elem> row) {
  const bool all_zero = std::all_of(row.begin(), row.end(), [](Elem e) { return e.value == 0; });
  const bool all_one = std::all_of(row.begin(), row.end(), [](Elem e) { return e.value == 1; });
  if (row.empty() || all_zero || all_one) return 0;
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < 2 * row.size(); ++i) {
    if (row[i % row.size()].value == 0) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return std::min(best, row.size() - 1);
}

GapStatistic gap_statistic(const Matrix& a) {
  GapStatistic g;
  for (std::size_t i = 1; i < a.rows(); ++i) {
    std::vector<Elem> row;
    for (std::size_t j = 1; j < a.cols(); ++j) row.push_back(a(i, j));
    g.row_gaps.push_back(circular_zero_run(row));
  }
  if (!g.row_gaps.empty()) g.max_gap = *std::max_element(g.row_gaps.begin(), g.row_gaps.end());
  return g;
}

GapBoundProbe das_mullen_bound(const ReducedPoly& f) {
  GapBoundProbe probe;
  probe.gaps = gap_statistic(build_direct(f));
  probe.value_set_size = census_brute(f).size;
  probe.bound = probe.gaps.max_gap + 2;
  probe.holds = probe.value_set_size >= probe.bound;
  return probe;
}

bool commutes_with_linear(const ReducedPoly& f, Elem a, Elem b) {
  const FieldCtx& F = *f.field();
  if (b.value == 0) throw Error(ErrorKind::InvalidArgument, "b must be nonzero");
  const std::size_t q = F.q();
  std::vector<Elem> a_pow(q);
  a_pow[0] = F.one();
  for (std::size_t t = 1; t < q; ++t) a_pow[t] = F.mul(a_pow[t - 1], a);

  // b_0 (b - 1) = -a + sum_{t>=1} b_t a^t
  Elem rhs = F.neg(a);
  for (std::size_t t = 1; t < q; ++t) rhs = F.add(rhs, F.mul(f[t], a_pow[t]));
  if (F.mul(f[0], F.sub(b, F.one())) != rhs) return false;

  // b_s (1 - b^{s-1}) = b^{s-1} sum_{t>s} C(t, s) a^{t-s} b_t
  Elem b_pow = F.one();  // b^{s-1}
  for (std::size_t s = 1; s < q; ++s) {
    Elem sum = F.zero();
    for (std::size_t t = s + 1; t < q; ++t) {
      if (f[t].value == 0) continue;
      const Elem binom = F.from_int(binomial_mod_p(t, s, F.p()));
      sum = F.add(sum, F.mul(binom, F.mul(a_pow[t - s], f[t])));
    }
    if (F.mul(f[s], F.sub(F.one(), b_pow)) != F.mul(b_pow, sum)) return false;
    b_pow = F.mul(b_pow, b);
  }
  return true;
}

bool commutes_with_linear_pointwise(const ReducedPoly& f, Elem a, Elem b) {
  const FieldCtx& F = *f.field();
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    const Elem lhs = evaluate(f, F.add(F.mul(b, Elem{x}), a));
    const Elem rhs = F.add(F.mul(b, evaluate(f, Elem{x})), a);
    if (lhs != rhs) return false;
  }
  return true;
}

bool commutes_with_linear_matrix(const ReducedPoly& f, Elem a, Elem b) {
  const Matrix af = build_direct(f);
  const Matrix al = build_direct(linear_poly(f.field(), a, b));
  // Column 1 of A(l) A(f) is v_{f o l}; column 1 of A(f) A(l) is v_{l o f}.
  const auto left = matvec(al, af.column(1));
  const auto right = matvec(af, al.column(1));
  return std::equal(left.begin(), left.end(), right.begin());
}

}  // namespace powmat
