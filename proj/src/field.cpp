#include "powmat/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace powmat {

namespace {

// Dense polynomials over F_p, low degree first, trimmed (empty = 0).
using FpPoly = std::vector<std::uint32_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(c), m, p);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (result > cap / base) {
      throw Error(ErrorKind::SizeLimit, "field order " + std::to_string(base) + "^" +
                                            std::to_string(exp) + " exceeds cap " +
                                            std::to_string(cap));
    }
    result *= base;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) noexcept {
  return a / std::gcd(a, b) * b;
}

std::uint64_t multiplicative_order_mod(std::uint64_t base, std::uint64_t modulus) {
  if (modulus == 1) return 1;
  if (std::gcd(base, modulus) != 1) {
    throw Error(ErrorKind::InvalidArgument, "base not invertible modulo " + std::to_string(modulus));
  }
  std::uint64_t x = base % modulus;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * (base % modulus) % modulus;  // moduli here are cycle lcms, far below 2^32
    ++k;
  }
  return k;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  FpPoly m(coeffs.begin(), coeffs.end());
  trim(m);
  if (m.size() < 2) return false;
  const std::size_t n = m.size() - 1;
  if (n == 1) return true;
  // x^{p^k} - x must be coprime to m for every k <= n/2.
  FpPoly h = poly_mod(FpPoly{0, 1}, m, p);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    FpPoly acc{1};
    FpPoly base = h;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, m, p);
      base = poly_mulmod(base, base, m, p);
    }
    h = acc;
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (poly_gcd(m, diff, p).size() > 1) return false;
  }
  return true;
}

Field FieldCtx::create(std::uint32_t p, std::uint32_t n,
                       std::optional<std::vector<std::uint32_t>> modulus,
                       std::uint64_t size_cap) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const std::uint64_t q = checked_power(p, n, size_cap);
  if (q > (std::uint64_t{1} << 31)) {
    throw Error(ErrorKind::SizeLimit, "field order exceeds 2^31");
  }

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = static_cast<std::uint32_t>(q);
  ctx->size_cap_ = size_cap;

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != n + 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "modulus must have " + std::to_string(n + 1) + " coefficients");
    }
    if (std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; })) {
      throw Error(ErrorKind::InvalidArgument, "modulus coefficients must lie in [0, p)");
    }
    if (m.back() != 1) throw Error(ErrorKind::InvalidArgument, "modulus must be monic");
    if (n > 1) {
      if (!is_irreducible_mod_p(m, p)) {
        throw Error(ErrorKind::Reducible, "supplied modulus is reducible over F_" + std::to_string(p));
      }
      ctx->modulus_ = m;
    }
  } else if (n > 1) {
    const std::uint64_t candidates = q;  // p^n choices of (c_0..c_{n-1})
    for (std::uint64_t idx = 0; idx < candidates; ++idx) {
      std::vector<std::uint32_t> m(n + 1, 0);
      std::uint64_t rest = idx;
      for (std::uint32_t i = 0; i < n; ++i) {
        m[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      m[n] = 1;
      if (m[0] == 0) continue;
      if (is_irreducible_mod_p(m, p)) {
        ctx->modulus_ = std::move(m);
        break;
      }
    }
  }

  ctx->factors_ = prime_factors(q - 1);

  if (q == 2) {
    ctx->generator_ = Elem{1};
  } else {
    for (std::uint32_t a = 2; a < q; ++a) {
      if (ctx->order(Elem{a}) == q - 1) {
        ctx->generator_ = Elem{a};
        break;
      }
    }
  }

  if (n > 1) {
    ctx->exp_.resize(q - 1);
    ctx->log_.assign(q, 0);
    Elem x{1};
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      ctx->exp_[k] = x.value;
      ctx->log_[x.value] = k;
      x = ctx->slow_mul(x, ctx->generator_);
    }
  }
  return ctx;
}

Elem FieldCtx::from_int(std::int64_t v) const noexcept {
  const std::int64_t r = ((v % static_cast<std::int64_t>(p_)) + p_) % p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem FieldCtx::element(std::uint64_t v) const {
  if (v >= q_) {
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(v) + " is not an element of F_" + std::to_string(q_));
  }
  return Elem{static_cast<std::uint32_t>(v)};
}

Elem FieldCtx::add(Elem a, Elem b) const noexcept {
  if (n_ == 1) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.value} + b.value) % p_)};
  if (p_ == 2) return Elem{a.value ^ b.value};
  std::uint32_t out = 0, scale = 1;
  std::uint32_t x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elem{out};
}

Elem FieldCtx::neg(Elem a) const noexcept {
  if (n_ == 1) return Elem{a.value == 0 ? 0 : p_ - a.value};
  if (p_ == 2) return a;
  std::uint32_t out = 0, scale = 1, x = a.value;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    x /= p_;
    scale *= p_;
  }
  return Elem{out};
}

Elem FieldCtx::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FieldCtx::mul(Elem a, Elem b) const noexcept {
  if (a.value == 0 || b.value == 0) return Elem{0};
  if (n_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  if (exp_.empty()) return slow_mul(a, b);
  const std::uint64_t s = std::uint64_t{log_[a.value]} + log_[b.value];
  return Elem{exp_[s % (q_ - 1)]};
}

Elem FieldCtx::slow_mul(Elem a, Elem b) const {
  if (n_ == 1) return mul(a, b);
  const auto da = digits(a), db = digits(b);
  FpPoly prod = poly_mulmod(FpPoly(da.begin(), da.end()), FpPoly(db.begin(), db.end()),
                            modulus_, p_);
  return from_digits(prod);
}

Elem FieldCtx::inv(Elem a) const {
  if (a.value == 0) throw Error(ErrorKind::DivideByZero, "inverse of 0");
  if (n_ > 1 && !exp_.empty()) {
    const std::uint32_t l = log_[a.value];
    return Elem{exp_[(q_ - 1 - l) % (q_ - 1)]};
  }
  return pow(a, q_ - 2);
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result{1}, base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::vector<std::uint32_t> FieldCtx::digits(Elem a) const {
  std::vector<std::uint32_t> d(n_, 0);
  std::uint32_t x = a.value;
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Elem FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > n_) throw Error(ErrorKind::InvalidArgument, "too many digits");
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t d : digits) {
    if (d >= p_) throw Error(ErrorKind::InvalidArgument, "digit out of range");
    out += d * scale;
    scale *= p_;
  }
  return Elem{out};
}

std::uint64_t FieldCtx::order(Elem a) const {
  if (a.value == 0) throw Error(ErrorKind::DivideByZero, "order of 0 is undefined");
  std::uint64_t t = q_ - 1;
  for (std::uint64_t r : factors_) {
    while (t % r == 0 && pow(a, t / r) == one()) t /= r;
  }
  return t;
}

Embedding extension_of(const Field& base, std::uint32_t m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const std::uint32_t q = base->q();
  if (m == 1) {
    Embedding id{base, base, std::vector<Elem>(q)};
    for (std::uint32_t a = 0; a < q; ++a) id.image[a] = Elem{a};
    return id;
  }
  if (std::uint64_t{base->n()} * m > 64) {
    throw Error(ErrorKind::SizeLimit, "extension degree too large");
  }
  Field ext = FieldCtx::create(base->p(), base->n() * m, std::nullopt, base->size_cap());

  // Minimal polynomial of the generator over F_p: product over its Frobenius orbit.
  const Elem gamma = base->generator();
  std::vector<Elem> conjugates{gamma};
  for (Elem c = base->pow(gamma, base->p()); c != gamma; c = base->pow(c, base->p())) {
    conjugates.push_back(c);
  }
  std::vector<Elem> minpoly{base->one()};
  for (Elem c : conjugates) {
    std::vector<Elem> next(minpoly.size() + 1, base->zero());
    for (std::size_t i = 0; i < minpoly.size(); ++i) {
      next[i + 1] = base->add(next[i + 1], minpoly[i]);
      next[i] = base->sub(next[i], base->mul(minpoly[i], c));
    }
    minpoly = std::move(next);
  }
  // Coefficients live in the prime subfield, whose canonical encoding is shared with K.
  auto eval_in_ext = [&](Elem beta) {
    Elem acc = ext->zero();
    for (auto it = minpoly.rbegin(); it != minpoly.rend(); ++it) {
      acc = ext->add(ext->mul(acc, beta), Elem{it->value});
    }
    return acc;
  };
  Elem root{0};
  bool found = false;
  for (std::uint32_t b = 1; b < ext->q(); ++b) {
    if (eval_in_ext(Elem{b}) == ext->zero()) {
      root = Elem{b};
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "no root of the minimal polynomial found");

  Embedding emb{base, ext, std::vector<Elem>(q, ext->zero())};
  Elem a = base->one(), b = ext->one();
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    emb.image[a.value] = b;
    a = base->mul(a, gamma);
    b = ext->mul(b, root);
  }
  return emb;
}

}  // namespace powmat
