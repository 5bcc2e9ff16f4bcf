#ifndef POWMAT_POLY_HPP
#define POWMAT_POLY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "powmat/field.hpp"

namespace powmat {

/// f(x) = sum a_i x^i reduced modulo x^q - x: exactly q coefficients, so the
/// coefficient vector is v_f = (a_0, ..., a_{q-1}).
class ReducedPoly {
 public:
  /// `coeffs` must have length q with every entry in the field.
  ReducedPoly(Field field, std::vector<Elem> coeffs);

  static ReducedPoly zero(const Field& field);
  static ReducedPoly constant(const Field& field, Elem c);
  /// c * x^k with 0 <= k < q.
  static ReducedPoly monomial(const Field& field, Elem c, std::size_t k);
  static ReducedPoly identity(const Field& field);

  const Field& field() const noexcept { return field_; }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }
  Elem operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool is_zero() const noexcept;
  /// Largest i with a_i != 0; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;

  friend bool operator==(const ReducedPoly& a, const ReducedPoly& b);

 private:
  Field field_;
  std::vector<Elem> coeffs_;
};

/// Folds x^i (i >= q) onto x^{1 + ((i-1) mod (q-1))}; the function on F_q is unchanged.
ReducedPoly reduce(const Field& field, std::span<const Elem> raw);

Elem evaluate(const ReducedPoly& f, Elem x);
/// values[a] = f(a) for every canonical a in [0, q).
std::vector<Elem> value_table(const ReducedPoly& f);

/// Unique reduced polynomial with f(a) = values[a]. Requires values.size() == q.
ReducedPoly interpolate(const Field& field, std::span<const Elem> values);

/// Lagrange interpolation over a field `ext` containing a copy of F_q: `points`
/// is the embedded F_q (all q of them) and `values[i]` the target at points[i].
/// Returns q coefficients in `ext`.
std::vector<Elem> interpolate_on_subfield(const FieldCtx& ext, std::uint32_t q,
                                          std::span<const Elem> points,
                                          std::span<const Elem> values);

/// C(N, i) mod p for i = 0..N via Pascal's rule.
std::vector<std::uint32_t> binomial_row_mod_p(std::uint32_t p, std::uint32_t N);

ReducedPoly add(const ReducedPoly& f, const ReducedPoly& g);
ReducedPoly scale(const ReducedPoly& f, Elem c);
ReducedPoly mul_reduced(const ReducedPoly& f, const ReducedPoly& g);

/// f^k with f^0 = 1 for f != f_0, and f_0^0 = f_0.
ReducedPoly power_reduced(const ReducedPoly& f, std::uint64_t k);

/// g(f(x)) as sum_k b_k f^k.
ReducedPoly compose_by_powers(const ReducedPoly& g, const ReducedPoly& f);
/// g(f(x)) by interpolating a -> g(f(a)).
ReducedPoly compose_by_interpolation(const ReducedPoly& g, const ReducedPoly& f);
/// Default composition route (interpolation).
ReducedPoly compose(const ReducedPoly& g, const ReducedPoly& f);

/// Throws CtxMismatch unless both live in the same field.
void require_same_field(const FieldCtx& a, const FieldCtx& b);

}  // namespace powmat

#endif  // POWMAT_POLY_HPP
