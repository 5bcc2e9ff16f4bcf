#include "powmat/power_matrix.hpp"

#include <algorithm>
#include <thread>

namespace powmat {

namespace {

constexpr std::size_t kParallelThreshold = 256;

}  // namespace

Matrix build_direct(const ReducedPoly& f) {
  const std::size_t q = f.size();
  Matrix a(f.field(), q, q);
  if (f.is_zero()) return a;
  ReducedPoly power = power_reduced(f, 0);
  for (std::size_t k = 0; k < q; ++k) {
    if (k > 0) power = mul_reduced(power, f);
    std::copy(power.coeffs().begin(), power.coeffs().end(), a.column(k).begin());
  }
  return a;
}

Matrix build_interpolation(const ReducedPoly& f) {
  const FieldCtx& F = *f.field();
  const std::uint32_t q = F.q();
  Matrix a(f.field(), q, q);
  if (f.is_zero()) return a;

  const auto values = value_table(f);
  const auto binom = binomial_row_mod_p(F.p(), q - 1);
  // neg_pow[a][e] = (-a)^e for e in [0, q-1], with 0^0 = 1.
  std::vector<std::vector<Elem>> neg_pow(q, std::vector<Elem>(q));
  for (std::uint32_t x = 0; x < q; ++x) {
    const Elem m = F.neg(Elem{x});
    neg_pow[x][0] = F.one();
    for (std::uint32_t e = 1; e < q; ++e) neg_pow[x][e] = F.mul(neg_pow[x][e - 1], m);
  }

  auto fill_column = [&](std::uint32_t k) {
    auto col = a.column(k);
    std::vector<Elem> fk(q);
    for (std::uint32_t x = 0; x < q; ++x) fk[x] = F.pow(values[x], k);  // 0^0 = 1
    col[0] = fk[0];
    for (std::uint32_t i = 1; i < q; ++i) {
      Elem sum = F.zero();
      for (std::uint32_t x = 0; x < q; ++x) {
        if (fk[x].value != 0) sum = F.add(sum, F.mul(fk[x], neg_pow[x][q - 1 - i]));
      }
      col[i] = F.neg(F.mul(Elem{binom[i]}, sum));
    }
  };

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (q < kParallelThreshold || workers == 1) {
    for (std::uint32_t k = 0; k < q; ++k) fill_column(k);
    return a;
  }
  // Disjoint column ranges per worker; the matrix storage is column-major.
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint32_t k = w; k < q; k += workers) fill_column(k);
      });
    }
  }
  return a;
}

ReducedPoly apply_to_vector(const Matrix& a, const ReducedPoly& g) {
  require_same_field(*a.field(), *g.field());
  return ReducedPoly(g.field(), matvec(a, g.coeffs()));
}

ReducedPoly column_poly(const Matrix& a, std::size_t k) {
  const auto col = a.column(k);
  return ReducedPoly(a.field(), std::vector<Elem>(col.begin(), col.end()));
}

bool hermite_last_row(const Matrix& a) {
  const std::size_t q = a.rows();
  if (q < 2 || a.cols() != q) return false;
  const std::size_t last = q - 1;
  for (std::size_t k = 1; k + 1 < q; ++k) {
    if (a(last, k).value != 0) return false;
  }
  return a(last, last).value == 1;
}

Matrix antidiagonal_conjugate(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix out(a.field(), n, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) out(i, j) = a(n - 1 - i, a.cols() - 1 - j);
  }
  return out;
}

Matrix antidiagonal_reflect_transpose(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix out(a.field(), a.cols(), n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < a.cols(); ++i) out(i, k) = a(n - 1 - k, a.cols() - 1 - i);
  }
  return out;
}

Matrix inverse_via_conjugation(const Matrix& a) {
  if (!hermite_last_row(a)) {
    throw Error(ErrorKind::NotPermutation, "matrix fails the last-row permutation test");
  }
  return antidiagonal_reflect_transpose(a);
}

bool involution_check(const Matrix& a) {
  if (!hermite_last_row(a)) {
    throw Error(ErrorKind::NotPermutation, "matrix fails the last-row permutation test");
  }
  const Matrix pa = matmul(Matrix::antidiagonal(a.field(), a.rows()), a);
  return matmul(pa, pa).is_identity();
}

bool is_permutation_by_values(const ReducedPoly& f) {
  std::vector<bool> seen(f.size(), false);
  for (Elem v : value_table(f)) {
    if (seen[v.value]) return false;
    seen[v.value] = true;
  }
  return true;
}

}  // namespace powmat
