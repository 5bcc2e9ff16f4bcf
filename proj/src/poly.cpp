#include "powmat/poly.hpp"

#include <algorithm>
#include <string>

namespace powmat {

void require_same_field(const FieldCtx& a, const FieldCtx& b) {
  if (!a.same_field(b)) {
    throw Error(ErrorKind::CtxMismatch, "operands belong to different fields (F_" +
                                            std::to_string(a.q()) + " vs F_" +
                                            std::to_string(b.q()) + ")");
  }
}

ReducedPoly::ReducedPoly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->q()) {
    throw Error(ErrorKind::InvalidArgument, "reduced polynomial needs exactly q = " +
                                                std::to_string(field_->q()) + " coefficients");
  }
  for (Elem c : coeffs_) {
    if (!field_->contains(c)) {
      throw Error(ErrorKind::InvalidArgument,
                  "coefficient " + std::to_string(c.value) + " outside the field");
    }
  }
}

ReducedPoly ReducedPoly::zero(const Field& field) {
  return ReducedPoly(field, std::vector<Elem>(field->q(), field->zero()));
}

ReducedPoly ReducedPoly::constant(const Field& field, Elem c) {
  return monomial(field, c, 0);
}

ReducedPoly ReducedPoly::monomial(const Field& field, Elem c, std::size_t k) {
  std::vector<Elem> v(field->q(), field->zero());
  v.at(k) = c;
  return ReducedPoly(field, std::move(v));
}

ReducedPoly ReducedPoly::identity(const Field& field) {
  return monomial(field, field->one(), field->q() > 1 ? 1 : 0);
}

bool ReducedPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c.value == 0; });
}

std::optional<std::size_t> ReducedPoly::degree() const noexcept {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].value != 0) return i;
  }
  return std::nullopt;
}

bool operator==(const ReducedPoly& a, const ReducedPoly& b) {
  return a.field_->same_field(*b.field_) && a.coeffs_ == b.coeffs_;
}

ReducedPoly reduce(const Field& field, std::span<const Elem> raw) {
  const FieldCtx& F = *field;
  const std::size_t q = F.q();
  std::vector<Elem> out(q, F.zero());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!F.contains(raw[i])) {
      throw Error(ErrorKind::InvalidArgument, "coefficient outside the field");
    }
    const std::size_t j = i < q ? i : 1 + (i - 1) % (q - 1);
    out[j] = F.add(out[j], raw[i]);
  }
  return ReducedPoly(field, std::move(out));
}

Elem evaluate(const ReducedPoly& f, Elem x) {
  const FieldCtx& F = *f.field();
  Elem acc = F.zero();
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

std::vector<Elem> value_table(const ReducedPoly& f) {
  const std::uint32_t q = f.field()->q();
  std::vector<Elem> out(q);
  for (std::uint32_t a = 0; a < q; ++a) out[a] = evaluate(f, Elem{a});
  return out;
}

std::vector<std::uint32_t> binomial_row_mod_p(std::uint32_t p, std::uint32_t N) {
  std::vector<std::uint32_t> row{1};
  row.reserve(N + 1);
  for (std::uint32_t r = 1; r <= N; ++r) {
    row.push_back(1);
    for (std::uint32_t i = r - 1; i > 0; --i) row[i] = (row[i] + row[i - 1]) % p;
  }
  return row;
}

std::vector<Elem> interpolate_on_subfield(const FieldCtx& ext, std::uint32_t q,
                                          std::span<const Elem> points,
                                          std::span<const Elem> values) {
  if (points.size() != q || values.size() != q) {
    throw Error(ErrorKind::InvalidArgument, "interpolation needs one value per field element");
  }
  // f(x) = sum_a f(a) (1 - (x - a)^{q-1}); the x^i coefficient of (x - a)^{q-1}
  // is C(q-1, i) (-a)^{q-1-i}.
  std::vector<Elem> acc(q, ext.zero());  // acc[i] = sum_a f(a) (-a)^{q-1-i}
  Elem constant = ext.zero();
  for (std::size_t k = 0; k < q; ++k) {
    const Elem v = values[k];
    if (v.value == 0) continue;
    if (points[k].value == 0) constant = ext.add(constant, v);
    const Elem minus_a = ext.neg(points[k]);
    Elem t = ext.one();  // (-a)^e, with 0^0 = 1
    for (std::uint32_t e = 0; e + 1 < q; ++e) {
      const std::uint32_t i = q - 1 - e;
      acc[i] = ext.add(acc[i], ext.mul(v, t));
      t = ext.mul(t, minus_a);
    }
  }
  const auto binom = binomial_row_mod_p(ext.p(), q - 1);
  std::vector<Elem> coeffs(q, ext.zero());
  coeffs[0] = constant;
  for (std::uint32_t i = 1; i < q; ++i) {
    coeffs[i] = ext.neg(ext.mul(Elem{binom[i]}, acc[i]));
  }
  return coeffs;
}

ReducedPoly interpolate(const Field& field, std::span<const Elem> values) {
  const std::uint32_t q = field->q();
  std::vector<Elem> points(q);
  for (std::uint32_t a = 0; a < q; ++a) points[a] = Elem{a};
  return ReducedPoly(field, interpolate_on_subfield(*field, q, points, values));
}

ReducedPoly add(const ReducedPoly& f, const ReducedPoly& g) {
  require_same_field(*f.field(), *g.field());
  const FieldCtx& F = *f.field();
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(f[i], g[i]);
  return ReducedPoly(f.field(), std::move(out));
}

ReducedPoly scale(const ReducedPoly& f, Elem c) {
  const FieldCtx& F = *f.field();
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(f[i], c);
  return ReducedPoly(f.field(), std::move(out));
}

ReducedPoly mul_reduced(const ReducedPoly& f, const ReducedPoly& g) {
  require_same_field(*f.field(), *g.field());
  const FieldCtx& F = *f.field();
  const std::size_t q = F.q();
  std::vector<Elem> conv(2 * q - 1, F.zero());
  const auto a = f.coeffs(), b = g.coeffs();
  for (std::size_t i = 0; i < q; ++i) {
    if (a[i].value == 0) continue;
    for (std::size_t j = 0; j < q; ++j) {
      if (b[j].value == 0) continue;
      conv[i + j] = F.add(conv[i + j], F.mul(a[i], b[j]));
    }
  }
  return reduce(f.field(), conv);
}

ReducedPoly power_reduced(const ReducedPoly& f, std::uint64_t k) {
  if (f.is_zero()) return f;
  ReducedPoly result = ReducedPoly::constant(f.field(), f.field()->one());
  ReducedPoly base = f;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = mul_reduced(result, base);
    if (k > 1) base = mul_reduced(base, base);
  }
  return result;
}

ReducedPoly compose_by_powers(const ReducedPoly& g, const ReducedPoly& f) {
  require_same_field(*g.field(), *f.field());
  // As a function g(f_0(x)) = g(0), so the k = 0 term is b_0 * 1 even for f = f_0.
  ReducedPoly acc = ReducedPoly::constant(f.field(), g[0]);
  ReducedPoly power = f;
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (k > 1) power = mul_reduced(power, f);
    if (g[k].value != 0) acc = add(acc, scale(power, g[k]));
  }
  return acc;
}

ReducedPoly compose_by_interpolation(const ReducedPoly& g, const ReducedPoly& f) {
  require_same_field(*g.field(), *f.field());
  auto values = value_table(f);
  for (Elem& v : values) v = evaluate(g, v);
  return interpolate(f.field(), values);
}

ReducedPoly compose(const ReducedPoly& g, const ReducedPoly& f) {
  return compose_by_interpolation(g, f);
}

}  // namespace powmat
