#ifndef POWMAT_FIELD_HPP
#define POWMAT_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "powmat/error.hpp"

namespace powmat {

/// Element of F_q in canonical encoding: the base-p digits of `value` are the
/// coefficients of the polynomial-basis representation (digit i <-> t^i).
struct Elem {
  std::uint32_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 16;

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// F_q = F_p[t] / (modulus). Immutable once built; share freely across threads.
class FieldCtx {
 public:
  /// Builds F_{p^n}. Without a modulus (and n > 1) the smallest monic
  /// irreducible of degree n is chosen, ordering candidates by the canonical
  /// integer encoding of their lower coefficients.
  static Field create(std::uint32_t p, std::uint32_t n,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                      std::uint64_t size_cap = kDefaultSizeCap);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint64_t size_cap() const noexcept { return size_cap_; }
  /// Monic modulus c_0..c_n, empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  bool same_field(const FieldCtx& other) const noexcept {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
  }

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  /// Checked conversion of a canonical integer.
  Elem element(std::uint64_t v) const;
  bool contains(Elem a) const noexcept { return a.value < q_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// Smallest element of multiplicative order q-1 (1 for F_2).
  Elem generator() const noexcept { return generator_; }
  /// Multiplicative order; DivideByZero on 0.
  std::uint64_t order(Elem a) const;

  /// Prime factors of q-1, ascending, without multiplicity.
  const std::vector<std::uint64_t>& group_order_factors() const noexcept { return factors_; }

 private:
  FieldCtx() = default;

  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_ = 2;
  std::uint32_t n_ = 1;
  std::uint32_t q_ = 2;
  std::uint64_t size_cap_ = kDefaultSizeCap;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> factors_;
  Elem generator_{1};
  // exp_[k] = generator^k for k in [0, q-1); log_[a] for a != 0. Extension fields only.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Injective homomorphism F_q -> K, tabulated on all of F_q.
struct Embedding {
  Field base;
  Field ext;
  std::vector<Elem> image;

  Elem operator()(Elem a) const { return image.at(a.value); }
};

/// K = F_{q^m} built as F_{p^{nm}}, with the embedding that sends the
/// generator of F_q to the smallest root of its minimal polynomial in K.
/// For m = 1 the base field itself is returned with the identity map.
Embedding extension_of(const Field& base, std::uint32_t m);

bool is_prime(std::uint64_t n) noexcept;
/// Prime factors (ascending, distinct) by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) noexcept;

/// Smallest k >= 1 with base^k = 1 mod modulus; requires gcd(base, modulus) = 1.
std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t modulus);

/// Irreducibility over F_p of a monic polynomial c_0..c_n (degree n >= 1).
bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p);

}  // namespace powmat

#endif  // POWMAT_FIELD_HPP
