#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "powmat/field.hpp"

using namespace powmat;

namespace {

std::vector<std::uint32_t> first_irreducible_brute(std::uint32_t p, std::uint32_t n) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    oracle::IntVec m(n + 1, 0);
    std::uint64_t r = idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      m[i] = static_cast<std::int64_t>(r % p);
      r /= p;
    }
    m[n] = 1;
    if (oracle::is_irreducible_brute(m, p)) return {m.begin(), m.end()};
  }
  return {};
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {2, 6}};

}  // namespace

TEST(FieldCreate, PrimeField) {
  auto f = FieldCtx::create(5, 1);
  EXPECT_EQ(f->q(), 5u);
  EXPECT_EQ(f->p(), 5u);
  EXPECT_EQ(f->n(), 1u);
}

TEST(FieldCreate, F8UsesXCubedPlusXPlusOne) {
  auto f = FieldCtx::create(2, 3);
  EXPECT_EQ(f->q(), 8u);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(FieldCreate, DefaultModulusIsFirstIrreducibleByEncoding) {
  for (auto [p, n] : kSmallFields) {
    if (n == 1) continue;
    SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(n));
    EXPECT_EQ(FieldCtx::create(p, n)->modulus(), first_irreducible_brute(p, n));
  }
}

TEST(FieldCreate, Errors) {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([] { FieldCtx::create(4, 1); }), ErrorKind::NonPrime);
  EXPECT_EQ(kind_of([] { FieldCtx::create(1, 1); }), ErrorKind::NonPrime);
  EXPECT_EQ(kind_of([] { FieldCtx::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }),
            ErrorKind::Reducible);
  EXPECT_EQ(kind_of([] { FieldCtx::create(2, 17); }), ErrorKind::SizeLimit);
  EXPECT_EQ(kind_of([] { FieldCtx::create(2, 5, std::nullopt, 16); }), ErrorKind::SizeLimit);
  EXPECT_NO_THROW(FieldCtx::create(2, 2, std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FieldArith, Examples) {
  auto f5 = FieldCtx::create(5, 1);
  EXPECT_EQ(f5->mul(Elem{2}, Elem{3}), Elem{1});
  EXPECT_EQ(f5->add(Elem{4}, Elem{3}), Elem{2});
  EXPECT_EQ(f5->inv(Elem{3}), Elem{2});
  EXPECT_EQ(f5->neg(Elem{1}), Elem{4});
  auto f8 = FieldCtx::create(2, 3);
  EXPECT_EQ(f8->mul(Elem{2}, Elem{4}), Elem{3});  // t * t^2 = t + 1
  EXPECT_EQ(f8->mul(Elem{4}, Elem{4}), Elem{6});  // t^4 = t^2 + t
  EXPECT_THROW(f5->inv(Elem{0}), Error);
}

TEST(FieldArith, PrimeFieldsMatchIntegerOracle) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto f = FieldCtx::create(p, 1);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        EXPECT_EQ(f->add(Elem{a}, Elem{b}).value, (a + b) % p);
        EXPECT_EQ(f->sub(Elem{a}, Elem{b}).value, (a + p - b) % p);
        EXPECT_EQ(f->mul(Elem{a}, Elem{b}).value, a * b % p);
      }
    }
  }
}

TEST(FieldArith, AxiomsExhaustiveSmall) {
  for (auto [p, n] : kSmallFields) {
    auto f = FieldCtx::create(p, n);
    const std::uint32_t q = f->q();
    SCOPED_TRACE(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Elem ea{a};
      EXPECT_EQ(f->pow(ea, q), ea);
      EXPECT_EQ(f->add(ea, f->neg(ea)), f->zero());
      if (a != 0) EXPECT_EQ(f->mul(ea, f->inv(ea)), f->one());
      for (std::uint32_t b = 0; b < q; ++b) {
        const Elem eb{b};
        EXPECT_EQ(f->mul(ea, eb), f->mul(eb, ea));
        EXPECT_EQ(f->add(ea, eb), f->add(eb, ea));
        const Elem c{(a * 7 + b * 3 + 1) % q};
        EXPECT_EQ(f->mul(ea, f->add(eb, c)), f->add(f->mul(ea, eb), f->mul(ea, c)));
        EXPECT_EQ(f->mul(f->mul(ea, eb), c), f->mul(ea, f->mul(eb, c)));
      }
    }
  }
}

TEST(FieldArith, LargerFieldRandomTriples) {
  auto f = FieldCtx::create(3, 5);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> d(0, f->q() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Elem a{d(rng)}, b{d(rng)}, c{d(rng)};
    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
  }
}

TEST(FieldArith, DigitsRoundTrip) {
  auto f = FieldCtx::create(3, 3);
  for (std::uint32_t a = 0; a < f->q(); ++a) {
    const auto d = f->digits(Elem{a});
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0] + 3 * d[1] + 9 * d[2], a);
    EXPECT_EQ(f->from_digits(d), Elem{a});
  }
}

TEST(FieldGenerator, Examples) {
  EXPECT_EQ(FieldCtx::create(5, 1)->generator(), Elem{2});
  EXPECT_EQ(FieldCtx::create(7, 1)->generator(), Elem{3});
  EXPECT_EQ(FieldCtx::create(2, 1)->generator(), Elem{1});
}

TEST(FieldGenerator, IsSmallestPrimitiveElement) {
  for (auto [p, n] : kSmallFields) {
    auto f = FieldCtx::create(p, n);
    const std::uint32_t q = f->q();
    std::uint32_t expected = 0;
    for (std::uint32_t a = 1; a < q && expected == 0; ++a) {
      std::uint32_t k = 1;
      Elem x{a};
      while (x != f->one()) {
        x = f->mul(x, Elem{a});
        ++k;
      }
      if (k == q - 1) expected = a;
    }
    EXPECT_EQ(f->generator().value, expected) << q;
    EXPECT_EQ(f->generator(), FieldCtx::create(p, n)->generator());
  }
}

TEST(FieldOrder, MatchesBruteForce) {
  EXPECT_EQ(FieldCtx::create(5, 1)->order(Elem{2}), 4u);
  EXPECT_EQ(FieldCtx::create(5, 1)->order(Elem{4}), 2u);
  EXPECT_EQ(FieldCtx::create(5, 1)->order(Elem{1}), 1u);
  EXPECT_THROW(FieldCtx::create(5, 1)->order(Elem{0}), Error);
  for (auto [p, n] : kSmallFields) {
    auto f = FieldCtx::create(p, n);
    for (std::uint32_t a = 1; a < f->q(); ++a) {
      std::uint64_t k = 1;
      for (Elem x{a}; x != f->one(); x = f->mul(x, Elem{a})) ++k;
      EXPECT_EQ(f->order(Elem{a}), k);
    }
  }
}

TEST(Extension, IdentityForDegreeOne) {
  auto f = FieldCtx::create(5, 1);
  auto e = extension_of(f, 1);
  EXPECT_EQ(e.ext->q(), 5u);
  for (std::uint32_t a = 0; a < 5; ++a) EXPECT_EQ(e(Elem{a}), Elem{a});
}

TEST(Extension, Examples) {
  auto e = extension_of(FieldCtx::create(5, 1), 2);
  EXPECT_EQ(e.ext->q(), 25u);
  EXPECT_EQ(e.ext->order(e(Elem{2})), 4u);
  auto f4 = FieldCtx::create(2, 2);
  auto e4 = extension_of(f4, 2);
  EXPECT_EQ(e4.ext->q(), 16u);
  EXPECT_EQ(e4.ext->order(e4(f4->generator())), 3u);
}

TEST(Extension, IsInjectiveRingHomomorphism) {
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> cases = {
      {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {2, 2, 3}, {2, 3, 2}, {7, 1, 2}, {3, 2, 2}};
  for (auto [p, n, m] : cases) {
    auto base = FieldCtx::create(p, n);
    auto e = extension_of(base, m);
    const auto& K = *e.ext;
    const std::uint32_t q = base->q();
    EXPECT_EQ(std::uint64_t{K.q()}, [&] {
      std::uint64_t r = 1;
      for (std::uint32_t i = 0; i < m; ++i) r *= q;
      return r;
    }());
    EXPECT_EQ(e(base->zero()), K.zero());
    EXPECT_EQ(e(base->one()), K.one());
    std::set<Elem> images;
    for (std::uint32_t a = 0; a < q; ++a) {
      images.insert(e(Elem{a}));
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(e(base->add(Elem{a}, Elem{b})), K.add(e(Elem{a}), e(Elem{b})));
        EXPECT_EQ(e(base->mul(Elem{a}, Elem{b})), K.mul(e(Elem{a}), e(Elem{b})));
      }
    }
    EXPECT_EQ(images.size(), q);
  }
}

TEST(Extension, RespectsSizeCap) {
  auto f = FieldCtx::create(2, 3, std::nullopt, 64);
  EXPECT_NO_THROW(extension_of(f, 2));
  EXPECT_THROW(extension_of(f, 3), Error);
}

TEST(NumberTheory, Helpers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(257));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(lcm_u64(4, 6), 12u);
  EXPECT_EQ(multiplicative_order_mod(3, 4), 2u);
  EXPECT_EQ(multiplicative_order_mod(7, 5), 4u);
  EXPECT_EQ(multiplicative_order_mod(2, 1), 1u);
}

TEST(NumberTheory, IrreducibilityMatchesBruteForce) {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < n; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint32_t> m(n + 1, 0);
        oracle::IntVec mi(n + 1, 0);
        std::uint64_t r = idx;
        for (std::uint32_t i = 0; i < n; ++i) {
          m[i] = static_cast<std::uint32_t>(r % p);
          mi[i] = m[i];
          r /= p;
        }
        m[n] = mi[n] = 1;
        EXPECT_EQ(is_irreducible_mod_p(m, p), oracle::is_irreducible_brute(mi, p));
      }
    }
  }
}
