#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "powmat/census.hpp"
#include "powmat/power_matrix.hpp"

using namespace powmat;

namespace {

ReducedPoly P(const Field& f, std::vector<std::uint32_t> c) {
  std::vector<Elem> e;
  for (auto v : c) e.push_back(Elem{v});
  return reduce(f, e);
}

ReducedPoly random_low_degree(const Field& f, std::size_t max_deg, std::mt19937_64& rng) {
  std::vector<Elem> c(f->q(), Elem{0});
  for (std::size_t i = 0; i <= max_deg && i < c.size(); ++i)
    c[i] = Elem{static_cast<std::uint32_t>(rng() % f->q())};
  return ReducedPoly(f, c);
}

std::size_t brute_nonzero_solutions(const ReducedPoly& f, Elem c) {
  std::size_t n = 0;
  for (std::uint32_t x = 1; x < f.size(); ++x) n += evaluate(f, Elem{x}) == c;
  return n;
}

}  // namespace

TEST(Census, Examples) {
  auto f = FieldCtx::create(5, 1);
  const auto c = census_brute(P(f, {0, 0, 1}));
  EXPECT_EQ(c.size, 3u);
  EXPECT_EQ(c.multiplicity, (std::vector<std::size_t>{1, 2, 0, 0, 2}));
  EXPECT_EQ(census_brute(P(f, {1, 1, 1})).multiplicity, (std::vector<std::size_t>{0, 2, 1, 2, 0}));
  EXPECT_EQ(census_brute(ReducedPoly::zero(f)).size, 1u);
  auto f7 = FieldCtx::create(7, 1);
  EXPECT_EQ(value_set_size_via_rank(P(f7, {0, 0, 0, 1})), 3u);
  EXPECT_EQ(value_set_size_via_rank(P(f, {3})), 1u);
  EXPECT_EQ(value_set_size_via_rank(ReducedPoly::zero(f)), 0u);
}

TEST(Census, RankMatchesBruteForceOffZero) {
  for (auto f : {FieldCtx::create(2, 1), FieldCtx::create(3, 1), FieldCtx::create(2, 2)}) {
    for (const auto& g : oracle::all_polys(f)) {
      if (g.is_zero()) continue;
      EXPECT_EQ(value_set_size_via_rank(g), census_brute(g).size);
      EXPECT_EQ(census_brute(g).size, oracle::image_size(value_table(g)));
    }
  }
}

TEST(KonigRados, Examples) {
  auto f = FieldCtx::create(5, 1);
  const auto sq = P(f, {0, 0, 1});
  const auto four = konig_rados_count(sq, Elem{4});
  EXPECT_EQ(four.nonzero_solutions, 2u);
  EXPECT_EQ(four.circulant_rank, 2u);
  const auto two = konig_rados_count(sq, Elem{2});
  EXPECT_EQ(two.nonzero_solutions, 0u);
  EXPECT_EQ(two.circulant_rank, 4u);
  EXPECT_EQ(konig_rados_count(sq, Elem{0}).multiplicity, 1u);
  EXPECT_FALSE(konig_rados_in_value_set(sq, Elem{2}));
  EXPECT_TRUE(konig_rados_in_value_set(sq, Elem{0}));
  for (std::uint32_t c = 1; c < 5; ++c)
    EXPECT_EQ(konig_rados_count(ReducedPoly::identity(f), Elem{c}).nonzero_solutions, 1u);
}

TEST(KonigRados, CirculantShape) {
  auto f = FieldCtx::create(7, 1);
  const auto g = P(f, {1, 2, 3, 4, 5, 6, 2});
  const auto m = circulant_for_value(g, Elem{4});
  ASSERT_EQ(m.rows(), 6u);
  EXPECT_EQ(m(0, 0), Elem{(1 + 2 + 7 - 4) % 7});
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(m(i, j), m((i + 1) % 6, (j + 5) % 6));
}

TEST(KonigRados, MatchesBruteForce) {
  std::mt19937_64 rng(41);
  for (auto f : {FieldCtx::create(3, 1), FieldCtx::create(5, 1), FieldCtx::create(7, 1),
                 FieldCtx::create(2, 3), FieldCtx::create(3, 2)}) {
    for (int t = 0; t < 60; ++t) {
      const auto g = random_low_degree(f, 3 + t % 4, rng);
      const auto census = census_brute(g);
      for (std::uint32_t c = 0; c < f->q(); ++c) {
        const auto kr = konig_rados_count(g, Elem{c});
        EXPECT_EQ(kr.nonzero_solutions, brute_nonzero_solutions(g, Elem{c}));
        EXPECT_EQ(kr.multiplicity, census.multiplicity[c]);
        EXPECT_EQ(konig_rados_in_value_set(g, Elem{c}), census.multiplicity[c] > 0);
      }
    }
  }
}

TEST(MinimumValueSet, Examples) {
  auto f5 = FieldCtx::create(5, 1);
  const auto sq = minimum_value_set_check(P(f5, {0, 0, 1}));
  EXPECT_EQ(sq.degree, 2u);
  EXPECT_EQ(sq.lower_bound, 3u);
  EXPECT_EQ(sq.rank, 3u);
  EXPECT_TRUE(sq.is_minimum_value_set);
  EXPECT_TRUE(minimum_value_set_check(ReducedPoly::identity(f5)).is_minimum_value_set);
  auto f7 = FieldCtx::create(7, 1);
  EXPECT_TRUE(minimum_value_set_check(P(f7, {0, 0, 0, 1})).is_minimum_value_set);
  const auto cubic = minimum_value_set_check(P(f7, {0, 1, 0, 1}));  // x^3 + x
  EXPECT_TRUE(cubic.lower_bound_holds);
  EXPECT_EQ(cubic.rank, oracle::image_size(value_table(P(f7, {0, 1, 0, 1}))));
  for (const auto& bad : {ReducedPoly::zero(f5), P(f5, {3})}) {
    try {
      (void)minimum_value_set_check(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DegreeZero);
    }
  }
}

TEST(MinimumValueSet, LowerBoundAlwaysHolds) {
  std::mt19937_64 rng(42);
  for (auto f : {FieldCtx::create(5, 1), FieldCtx::create(7, 1), FieldCtx::create(3, 2)}) {
    for (int t = 0; t < 100; ++t) {
      const auto g = random_low_degree(f, f->q() - 1, rng);
      if (!g.degree() || *g.degree() == 0) continue;
      const auto r = minimum_value_set_check(g);
      EXPECT_TRUE(r.lower_bound_holds);
      EXPECT_EQ(r.is_minimum_value_set, census_brute(g).size == (f->q() - 1) / *g.degree() + 1);
    }
  }
}

TEST(GapStatistic, CircularRuns) {
  auto e = [](std::vector<std::uint32_t> v) {
    std::vector<Elem> out;
    for (auto x : v) out.push_back(Elem{x});
    return out;
  };
  EXPECT_EQ(circular_zero_run(e({1, 2, 1, 0})), 1u);
  EXPECT_EQ(circular_zero_run(e({0, 2, 2, 0})), 2u);
  EXPECT_EQ(circular_zero_run(e({0, 0, 1, 0})), 3u);
  EXPECT_EQ(circular_zero_run(e({0, 0, 0, 0})), 0u);
  EXPECT_EQ(circular_zero_run(e({1, 1, 1})), 0u);
}

TEST(GapStatistic, BoundProbe) {
  auto f = FieldCtx::create(5, 1);
  const auto id = das_mullen_bound(ReducedPoly::identity(f));
  EXPECT_EQ(id.gaps.max_gap, 3u);
  EXPECT_TRUE(id.holds);
  const auto k = das_mullen_bound(P(f, {2}));
  EXPECT_EQ(k.gaps.max_gap, 0u);
  EXPECT_EQ(k.value_set_size, 1u);
  EXPECT_FALSE(k.holds);
  const auto g = das_mullen_bound(P(f, {1, 1, 1}));
  EXPECT_EQ(g.gaps.row_gaps, (std::vector<std::size_t>{1, 1, 2, 2}));
  EXPECT_EQ(g.gaps.max_gap, 2u);
  EXPECT_EQ(g.bound, 4u);
  EXPECT_EQ(g.value_set_size, 3u);
  EXPECT_FALSE(g.holds);
}

TEST(Commute, Examples) {
  auto f = FieldCtx::create(5, 1);
  const auto cube = P(f, {0, 0, 0, 1});
  EXPECT_FALSE(commutes_with_linear(cube, Elem{0}, Elem{2}));
  EXPECT_TRUE(commutes_with_linear(cube, Elem{0}, Elem{4}));
  EXPECT_TRUE(commutes_with_linear(ReducedPoly::identity(f), Elem{3}, Elem{2}));
  EXPECT_TRUE(commutes_with_linear(P(f, {1, 1}), Elem{3}, Elem{1}));
  EXPECT_FALSE(commutes_with_linear(P(f, {1, 2}), Elem{3}, Elem{1}));
  try {
    (void)commutes_with_linear(cube, Elem{1}, Elem{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Commute, ClosedFormMatchesPointwise) {
  for (auto f : {FieldCtx::create(3, 1), FieldCtx::create(2, 2)}) {
    for (const auto& g : oracle::all_polys(f)) {
      for (std::uint32_t a = 0; a < f->q(); ++a) {
        for (std::uint32_t b = 1; b < f->q(); ++b) {
          const bool want = commutes_with_linear_pointwise(g, Elem{a}, Elem{b});
          EXPECT_EQ(commutes_with_linear(g, Elem{a}, Elem{b}), want);
          if (!g.is_zero()) EXPECT_EQ(commutes_with_linear_matrix(g, Elem{a}, Elem{b}), want);
        }
      }
    }
  }
  std::mt19937_64 rng(43);
  for (auto f : {FieldCtx::create(5, 1), FieldCtx::create(7, 1), FieldCtx::create(2, 3),
                 FieldCtx::create(3, 2)}) {
    for (int t = 0; t < 300; ++t) {
      // Mix random polynomials with ones that commute by construction.
      auto g = random_low_degree(f, f->q() - 1, rng);
      const Elem a{static_cast<std::uint32_t>(rng() % f->q())};
      const Elem b{static_cast<std::uint32_t>(1 + rng() % (f->q() - 1))};
      if (t % 3 == 0) g = P(f, {a.value, b.value});
      EXPECT_EQ(commutes_with_linear(g, a, b), commutes_with_linear_pointwise(g, a, b));
    }
  }
}

TEST(Commute, MatrixRouteDisagreesOnZeroPolynomial) {
  auto f = FieldCtx::create(5, 1);
  const auto zero = ReducedPoly::zero(f);
  EXPECT_FALSE(commutes_with_linear_pointwise(zero, Elem{1}, Elem{1}));
  EXPECT_TRUE(commutes_with_linear_matrix(zero, Elem{1}, Elem{1}));
  EXPECT_FALSE(commutes_with_linear(zero, Elem{1}, Elem{1}));
}
