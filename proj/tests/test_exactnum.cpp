#include <gtest/gtest.h>

#include <random>

#include "liecg/exactnum.hpp"

using namespace liecg;

namespace {

// independent high-precision evaluation
mpf_class approx(const FieldElem& x) {
  mpf_class s(0, 512);
  for (const auto& t : x.num().terms()) {
    mpf_class r(t.radicand, 512);
    r = sqrt(r);
    mpf_class q(t.coeff, 512);
    s += q * r;
  }
  return s;
}

FieldElem random_elem(std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-6, 6), d(1, 5), rad(1, 12), nterms(0, 3);
  FieldElem x;
  for (long k = nterms(rng); k > 0; --k) x += number(c(rng), d(rng), rad(rng));
  return x;
}

}  // namespace

TEST(Number, CanonicalRadicands) {
  EXPECT_EQ(number(1, 2, 8), number(1, 1, 2));
  EXPECT_EQ(number(3, 1, 1), FieldElem(3L));
  EXPECT_EQ(render(number(1, 6, 6)), "1/6*sqrt(6)");
  EXPECT_THROW(number(1, 0, 2), std::invalid_argument);
}

TEST(Number, Simplify) {
  FieldElem r2 = number(1, 1, 2);
  EXPECT_EQ(simplify(r2 + r2), number(2, 1, 2));
  EXPECT_EQ(simplify(SqrtSum(1), SqrtSum(Rational(1), 2)), number(1, 2, 2));
  FieldElem x = number(2, 1, 12) - number(1, 1, 3);
  EXPECT_EQ(x, number(3, 1, 3));
  EXPECT_EQ(simplify(simplify(x)), simplify(x));
}

TEST(Number, Arithmetic) {
  EXPECT_EQ(number(1, 1, 2) * number(1, 1, 3), number(1, 1, 6));
  EXPECT_EQ(invert(number(1, 1, 3)), number(1, 3, 3));
  FieldElem h = number(1, 2, 2) + number(1, 2, 2);
  EXPECT_EQ(h * h, FieldElem(2L));
  EXPECT_THROW(invert(FieldElem()), std::domain_error);
  // multi-term denominator is rationalized
  FieldElem y = FieldElem(1L) + number(1, 1, 2) + number(1, 1, 3);
  EXPECT_TRUE((y * invert(y)).is_one());
}

TEST(Number, Sign) {
  EXPECT_EQ(sign(FieldElem()), Sign::zero);
  EXPECT_EQ(sign(number(1, 1, 2) - FieldElem(1L)), Sign::positive);
  FieldElem x = number(3, 1, 2) - number(2, 1, 3) - number(1, 1, 6) + FieldElem(1L);
  // 4.2426 - 3.4641 - 2.4495 + 1 = -0.671
  EXPECT_EQ(sign(x), approx(x) > 0 ? Sign::positive : Sign::negative);
  EXPECT_EQ(sign(x), Sign::negative);
  EXPECT_NEAR(x.to_double(), -0.67095, 1e-5);
  EXPECT_EQ(sign(x + FieldElem(1L)), Sign::positive);
}

TEST(Number, Gcd) {
  EXPECT_EQ(gcd_of_fields({2L, 4L, 6L}), FieldElem(2L));
  EXPECT_EQ(gcd_of_fields({number(1, 1, 2), number(2, 1, 2)}), number(1, 1, 2));
  EXPECT_EQ(gcd_of_fields({number(3, 2, 2), number(9, 4, 2)}), number(3, 4, 2));
  EXPECT_EQ(gcd_of_fields({FieldElem(), FieldElem()}), FieldElem());
  EXPECT_EQ(gcd_of_fields({number(1, 1, 2), number(1, 1, 3)}), FieldElem(1L));
}

TEST(Number, Render) {
  EXPECT_EQ(render(FieldElem(-1L)), "-1");
  EXPECT_EQ(render(number(1, 2, 2), NumberFormat::tex), "\\frac{1}{2}\\sqrt{2}");
  EXPECT_EQ(render(number(1, 3, 3), NumberFormat::mathematica), "Sqrt[3]/3");
  FieldElem x = FieldElem(Rational(-3, 4)) + number(2, 5, 7) - number(1, 1, 10);
  EXPECT_EQ(parse_number(render(x)), x);
  EXPECT_EQ(parse_number("sqrt(8)"), number(2, 1, 2));
  EXPECT_THROW(parse_number("1/"), std::invalid_argument);
}

TEST(NumberProperty, FieldAxiomsAndSign) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    FieldElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) ASSERT_TRUE((a * invert(a)).is_one());
    ASSERT_EQ(simplify(a), a);
    mpf_class diff = approx(a) - approx(b);
    Sign s = sign(a - b);
    if (a == b)
      ASSERT_EQ(s, Sign::zero);
    else
      ASSERT_EQ(s, diff > 0 ? Sign::positive : Sign::negative);
  }
}
