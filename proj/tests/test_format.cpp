#include <gtest/gtest.h>

#include <random>

#include "powmat/format.hpp"

using namespace powmat;

TEST(FieldSpec, Parse) {
  const auto a = parse_field_spec("5");
  EXPECT_EQ(a.p, 5u);
  EXPECT_EQ(a.n, 1u);
  const auto b = parse_field_spec("2^3");
  EXPECT_EQ(b.p, 2u);
  EXPECT_EQ(b.n, 3u);
  for (const char* bad : {"", "abc", "2^", "^3", "2^x", "-5", "2^3^4"}) {
    EXPECT_THROW(parse_field_spec(bad), ParseError) << bad;
  }
}

TEST(Modulus, Parse) {
  EXPECT_EQ(parse_modulus("1,1,0,1"), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_THROW(parse_modulus("1,,1"), ParseError);
  EXPECT_THROW(parse_modulus("a"), ParseError);
}

TEST(Poly, ParseBothSyntaxes) {
  auto f = FieldCtx::create(5, 1);
  const auto a = parse_poly(f, "1,1,1");
  EXPECT_EQ(a.format, PolyFormat::Coefficients);
  const auto b = parse_poly(f, "1+1x+1x^2");
  EXPECT_EQ(b.format, PolyFormat::Monomial);
  EXPECT_EQ(a.poly, b.poly);
  EXPECT_EQ(parse_poly(f, "0,0,0,0,0,1").poly, ReducedPoly::identity(f));
  EXPECT_EQ(parse_poly(f, "1x^5").poly, ReducedPoly::identity(f));
  EXPECT_EQ(parse_poly(f, "2x+3").poly, parse_poly(f, "3,2").poly);
  for (const char* bad : {"", "1,,2", "1+", "x^", "1y", "1,5"}) {
    EXPECT_THROW(parse_poly(f, bad), ParseError) << bad;
  }
}

TEST(Poly, FormatExamples) {
  auto f = FieldCtx::create(5, 1);
  const auto g = parse_poly(f, "1,1,1").poly;
  EXPECT_EQ(format_poly(g, PolyFormat::Coefficients), "1,1,1");
  EXPECT_EQ(format_poly(g, PolyFormat::Monomial), "1+1x+1x^2");
  EXPECT_EQ(format_poly(ReducedPoly::zero(f), PolyFormat::Coefficients), "0");
  EXPECT_EQ(format_poly(ReducedPoly::zero(f), PolyFormat::Monomial), "0");
}

TEST(Poly, RoundTrip) {
  std::mt19937_64 rng(61);
  for (auto f : {FieldCtx::create(5, 1), FieldCtx::create(2, 3), FieldCtx::create(3, 2)}) {
    for (int t = 0; t < 100; ++t) {
      std::vector<Elem> c(f->q());
      for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % f->q())};
      const ReducedPoly g(f, c);
      for (auto fmt : {PolyFormat::Coefficients, PolyFormat::Monomial}) {
        const auto text = format_poly(g, fmt);
        EXPECT_EQ(parse_poly(f, text).poly, g) << text;
        EXPECT_EQ(format_poly(parse_poly(f, text).poly, fmt), text);
      }
    }
  }
}

TEST(Element, PrettyAndPlain) {
  auto f = FieldCtx::create(5, 2);
  EXPECT_EQ(format_element(*f, Elem{13}, true), "3+2t");
  EXPECT_EQ(format_element(*f, Elem{13}, false), "13");
  EXPECT_EQ(format_element(*f, Elem{5}, true), "t");
  EXPECT_EQ(format_element(*f, Elem{0}, true), "0");
  auto f27 = FieldCtx::create(3, 3);
  EXPECT_EQ(format_element(*f27, Elem{9 + 2}, true), "2+t^2");
  EXPECT_EQ(parse_element(f, "13"), Elem{13});
  EXPECT_THROW(parse_element(f, "25"), ParseError);
}

TEST(Matrix, Format) {
  auto f = FieldCtx::create(3, 1);
  EXPECT_EQ(format_matrix(Matrix::identity(f, 2), false), "1 0\n0 1\n");
}
