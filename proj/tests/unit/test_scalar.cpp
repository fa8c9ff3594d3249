#include <gtest/gtest.h>

#include <stdexcept>

#include "leavitt/scalar.hpp"

namespace leavitt {
namespace {

TEST(Field, ParsesRationalsAndPrimes) {
  EXPECT_EQ(Field::parse("Q"), Field::rationals());
  EXPECT_EQ(Field::parse("Fp:7").characteristic(), 7u);
  EXPECT_EQ(Field::parse("Fp:2147483647").to_string(), "Fp:2147483647");
}

TEST(Field, RejectsMalformedOrCompositeCharacteristic) {
  EXPECT_THROW(Field::parse("R"), std::invalid_argument);
  EXPECT_THROW(Field::parse("Fp:"), std::invalid_argument);
  EXPECT_THROW(Field::parse("Fp:9"), std::invalid_argument);
  EXPECT_THROW(Field::parse("Fp:7x"), std::invalid_argument);
  EXPECT_THROW(Field::prime(1), std::invalid_argument);
  // 2^31 + 11 is prime but above the supported range.
  EXPECT_THROW(Field::prime(2147483659ULL), std::invalid_argument);
}

TEST(Scalar, RationalArithmeticIsExact) {
  Scalar third = Scalar::rational(1, 3);
  EXPECT_EQ(third + third + third, Scalar(1));
  EXPECT_EQ(Scalar::rational(2, 4), Scalar::rational(1, 2));
  EXPECT_EQ((Scalar(3) / Scalar(6)).to_string(), "1/2");
  EXPECT_TRUE((third - third).is_zero());
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
  EXPECT_THROW(Scalar::rational(1, 0), std::domain_error);
}

TEST(Scalar, PrimeFieldReducesAndInverts) {
  Field f7 = Field::prime(7);
  Scalar half = Scalar::in_field(f7, 1, 2);
  EXPECT_EQ(half.to_string(), "4");
  EXPECT_TRUE((half * Scalar::in_field(f7, 2)).is_one());
  EXPECT_TRUE(Scalar::in_field(f7, 14).is_zero());
  EXPECT_EQ((-Scalar::in_field(f7, 3)).to_string(), "4");
  EXPECT_THROW(Scalar::in_field(f7, 1, 7), std::domain_error);
}

TEST(Scalar, MixedOperandsReduceIntoThePrimeField) {
  Field f5 = Field::prime(5);
  Scalar x = Scalar::in_field(f5, 3);
  EXPECT_EQ((x + Scalar(4)).to_string(), "2");
  EXPECT_EQ(Scalar(8), Scalar::in_field(f5, 3));
  EXPECT_THROW(x + Scalar::in_field(Field::prime(7), 1), std::domain_error);
}

TEST(Scalar, ParseHonoursField) {
  EXPECT_EQ(Scalar::parse("-3/6", Field::rationals()), Scalar::rational(-1, 2));
  EXPECT_EQ(Scalar::parse("-1", Field::prime(3)).to_string(), "2");
  EXPECT_THROW(Scalar::parse("abc", Field::rationals()), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("", Field::rationals()), std::invalid_argument);
}

TEST(Scalar, LargePrimeProductsStayExact) {
  Field f = Field::prime(2147483647);
  Scalar big = Scalar::in_field(f, 2147483646);  // -1
  EXPECT_TRUE((big * big).is_one());
}

TEST(Scalar, SignPower) {
  EXPECT_EQ(sign_power(0), 1);
  EXPECT_EQ(sign_power(3), -1);
  EXPECT_EQ(sign_power(-2), 1);
  EXPECT_EQ(sign_power(-1), -1);
}

}  // namespace
}  // namespace leavitt
