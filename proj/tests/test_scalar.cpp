#include <gtest/gtest.h>

#include "ejnf/error.hpp"
#include "ejnf/scalar.hpp"
#include "test_support.hpp"

namespace ejnf {
namespace {

Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }
Scalar c(Rational re, Rational im) { return Scalar(re, im); }

TEST(ParseScalar, Examples) {
  EXPECT_EQ(parse_scalar("1/2"), q(1, 2));
  EXPECT_EQ(parse_scalar("-3"), q(-3));
  EXPECT_EQ(parse_scalar("1/2-3/4i"), c(Rational(1, 2), Rational(-3, 4)));
}

TEST(ParseScalar, ImaginaryForms) {
  EXPECT_EQ(parse_scalar("3i"), c(0, 3));
  EXPECT_EQ(parse_scalar("-3/4i"), c(0, Rational(-3, 4)));
  EXPECT_EQ(parse_scalar("2+5i"), c(2, 5));
  EXPECT_EQ(parse_scalar("-2-1/3i"), c(-2, Rational(-1, 3)));
  EXPECT_EQ(parse_scalar("i"), Scalar::i());
  EXPECT_EQ(parse_scalar("-i"), -Scalar::i());
  EXPECT_EQ(parse_scalar("4/6"), q(2, 3));
}

TEST(ParseScalar, Errors) {
  for (const char* bad : {"", "abc", "1/", "/2", "1.5", "+3", "1 /2", "2+-3i", "--1", "1/2/3", "3-"}) {
    try {
      parse_scalar(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
  try {
    parse_scalar("1/0");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
    EXPECT_NE(std::string(e.what()).find("1/0"), std::string::npos);
  }
}

TEST(FormatScalar, Canonical) {
  EXPECT_EQ(format_scalar(q(0)), "0");
  EXPECT_EQ(format_scalar(q(-7, 14)), "-1/2");
  EXPECT_EQ(format_scalar(c(0, 1)), "1i");
  EXPECT_EQ(format_scalar(c(0, -1)), "-1i");
  EXPECT_EQ(format_scalar(c(Rational(1, 2), Rational(-3, 4))), "1/2-3/4i");
  EXPECT_EQ(format_scalar(c(2, 5)), "2+5i");
}

TEST(GaussianSqrt, Examples) {
  EXPECT_EQ(gaussian_sqrt(q(9, 4)), q(3, 2));
  EXPECT_EQ(gaussian_sqrt(q(-1)), Scalar::i());
  EXPECT_EQ(gaussian_sqrt(q(2)), std::nullopt);
}

TEST(GaussianSqrt, MoreCases) {
  EXPECT_EQ(gaussian_sqrt(q(0)), q(0));
  EXPECT_EQ(gaussian_sqrt(q(-4)), c(0, 2));
  // (1+i)² = 2i
  EXPECT_EQ(gaussian_sqrt(c(0, 2)), c(1, 1));
  // (2−i)² = 3−4i
  EXPECT_EQ(gaussian_sqrt(c(3, -4)), c(2, -1));
  // |1+i| = √2 is irrational
  EXPECT_EQ(gaussian_sqrt(c(1, 1)), std::nullopt);
}

TEST(ScalarOrder, Lexicographic) {
  EXPECT_LT(-Scalar::i(), Scalar::i());
  EXPECT_LT(q(0), Scalar::i());
  EXPECT_LT(Scalar::i(), q(1));
  EXPECT_LT(q(-1), q(0));
}

TEST(ScalarProperty, FieldAxioms) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Scalar a = gen.scalar(), b = gen.scalar(), d = gen.scalar();
    ASSERT_EQ((a + b) + d, a + (b + d));
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a + Scalar(0), a);
    ASSERT_EQ(a * Scalar(1), a);
    ASSERT_EQ(a + (-a), Scalar(0));
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), Scalar(1));
      ASSERT_EQ((b / a) * a, b);
    }
  }
}

TEST(ScalarProperty, SqrtOfSquare) {
  testing::Gen gen(12);
  for (int trial = 0; trial < 1000; ++trial) {
    Scalar w = gen.scalar();
    auto root = gaussian_sqrt(w * w);
    ASSERT_TRUE(root.has_value()) << format_scalar(w);
    ASSERT_EQ(*root * *root, w * w);
    ASSERT_TRUE(*root == w || *root == -w);
    ASSERT_TRUE(sgn(root->re()) > 0 || (sgn(root->re()) == 0 && sgn(root->im()) >= 0));
  }
}

TEST(ScalarProperty, ParseFormatRoundTrip) {
  testing::Gen gen(13);
  for (int trial = 0; trial < 1000; ++trial) {
    Scalar z = gen.scalar();
    ASSERT_EQ(parse_scalar(format_scalar(z)), z) << format_scalar(z);
  }
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW((void)(q(1) / q(0)), Error);
  EXPECT_THROW((void)q(0).inverse(), Error);
}

}  // namespace
}  // namespace ejnf
