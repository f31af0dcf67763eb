// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "support/reference.hpp"
#include "vacindex/asymptotics.hpp"

namespace vacindex {
namespace {

using C = Complex<Rational>;
using Cd = Complex<double>;

TorusLattice<Rational> unit_square() { return validate<Rational>(C{1, 0}, C{0, 1}); }
TorusLattice<double> hexagonal() {
  return validate<double>(Cd{1.0, 0.0}, Cd{0.5, std::sqrt(3.0) / 2.0});
}

TEST(CountingFunction, SmallValues) {
  const auto f = theta_form(unit_square(), ThetaVariant::Paper);
  EXPECT_EQ(counting_function(f, Rational(5)), 13);
  EXPECT_EQ(counting_function(f, Rational(0)), 0);
  EXPECT_EQ(counting_function(f, Rational(1)), 1);
}

TEST(CountingFunction, LeadingTermAtLargeArgument) {
  const auto f = theta_form(unit_square(), ThetaVariant::Paper);
  const long long count = counting_function(f, Rational(10000));
  const auto ref = reference::brute_count(reference::frac(1), reference::frac(0),
                                          reference::frac(1), reference::frac(10000));
  EXPECT_EQ(count, ref.strict);
  // leading term 2 pi x / sqrt(D) with D = 4; deviation well inside O(x^0.7)
  const double lead = counting_leading_term(f, 10000.0);
  EXPECT_NEAR(lead, kPi * 10000.0, 1e-9);
  EXPECT_LT(std::fabs(static_cast<double>(count) - lead), std::pow(10.0, 2.8));
}

TEST(CountingFunction, RelativeDeviationShrinks) {
  const auto f = theta_form(unit_square(), ThetaVariant::Paper);
  double prev = 1e9;
  for (double x : {100.0, 1000.0, 10000.0}) {
    const long long count = counting_function(f, Rational(static_cast<long long>(x)));
    const double dev = std::fabs(static_cast<double>(count) - counting_leading_term(f, x)) / x;
    EXPECT_LT(dev, prev);
    prev = dev;
  }
}

TEST(RatioTable, SquareRayApproachesLimit) {
  const auto rows = ratio_table(unit_square(), 1, 0, 40, ThetaVariant::Paper);
  ASSERT_EQ(rows.size(), 40u);
  const double limit = 1.0 / (2.0 * kPi);
  EXPECT_NEAR(rows.back().limit, limit, 1e-12);
  EXPECT_NEAR(rows.back().ratio, limit, 0.05 * limit);
  // spot value: t = 10 has threshold 100, index 305
  EXPECT_EQ(rows[9].index, 305);
  EXPECT_NEAR(rows[9].energy, 2.0 * kPiSq * 100.0, 1e-9);
}

TEST(RatioTable, RayIndependenceOfLimit) {
  const auto a = ratio_table(unit_square(), 1, 0, 40, ThetaVariant::Paper);
  const auto b = ratio_table(unit_square(), 2, 1, 18, ThetaVariant::Paper);
  const double limit = 1.0 / (2.0 * kPi);
  EXPECT_NEAR(a.back().ratio, limit, 0.05 * limit);
  EXPECT_NEAR(b.back().ratio, limit, 0.05 * limit);
  EXPECT_EQ(a.back().limit, b.back().limit);
}

TEST(RatioTable, HexagonalVariantsSeparate) {
  const auto lat = hexagonal();
  const double paper_limit = 2.0 / (3.0 * kPi);  // 1/(2 pi sin^2(pi/3))
  const auto paper = ratio_table(lat, 1, 1, 25, ThetaVariant::Paper);
  EXPECT_NEAR(paper.back().limit, paper_limit, 1e-12);
  EXPECT_NEAR(paper.back().ratio, paper_limit, 0.08 * paper_limit);
  // the dual form empirically approaches 1/(2 pi), visibly away from the
  // printed-form limit column
  const auto dual = ratio_table(lat, 1, 1, 25, ThetaVariant::Dual);
  EXPECT_NEAR(dual.back().ratio, 1.0 / (2.0 * kPi), 0.08 / (2.0 * kPi));
  EXPECT_NEAR(dual.back().limit, paper_limit, 1e-12);
}

TEST(RatioTable, RejectsZeroRayAndBadSteps) {
  EXPECT_THROW(ratio_table(unit_square(), 0, 0, 5, ThetaVariant::Paper), Error);
  EXPECT_THROW(ratio_table(unit_square(), 1, 0, 0, ThetaVariant::Paper), Error);
}

}  // namespace
}  // namespace vacindex
