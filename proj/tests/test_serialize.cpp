// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include <gtest/gtest.h>

#include "vacindex/serialize.hpp"

namespace vacindex {
namespace {

using C = Complex<Rational>;

TEST(Serialize, EnergyString) {
  EXPECT_EQ(energy_string(Rational(2)), "2*pi^2");
  EXPECT_EQ(energy_string(Rational(1, 2)), "1/2*pi^2");
  EXPECT_EQ(energy_string(Rational(0)), "0*pi^2");
}

TEST(Serialize, ComplexRoundTrip) {
  const Complex<Rational> z{Rational(3, 2), Rational(-7)};
  const auto j = complex_to_json(z);
  EXPECT_EQ(j[0].get<std::string>(), "3/2");
  EXPECT_TRUE(complex_from_json<Rational>(j) == z);
  const Complex<double> zf{0.25, -1.5};
  const auto jf = complex_to_json(zf);
  EXPECT_TRUE(complex_from_json<double>(jf) == zf);
}

TEST(Serialize, IndexNullityRoundTripExact) {
  const auto lat = validate<Rational>(C{1, 0}, C{0, 1});
  const auto vs = build(lat, 2, 1);
  const auto r = index_nullity(vs, ThetaVariant::Paper);
  const json j = index_nullity_to_json(vs, r);
  EXPECT_EQ(j.at("index").get<long long>(), 13);
  EXPECT_EQ(j.at("threshold").get<std::string>(), "5");
  EXPECT_EQ(j.at("energy").get<std::string>(), "10*pi^2");
  EXPECT_EQ(j.at("backend").get<std::string>(), "exact");
  const auto back = index_nullity_from_json<Rational>(j);
  EXPECT_TRUE(back == r);
}

TEST(Serialize, IndexNullityRoundTripFloat) {
  const auto lat = validate<double>(Complex<double>{1, 0}, Complex<double>{0.5, 0.8});
  const auto vs = build(lat, 1, -1);
  for (ThetaVariant v : {ThetaVariant::Paper, ThetaVariant::Dual}) {
    const auto r = index_nullity(vs, v);
    const json j = index_nullity_to_json(vs, r);
    const auto back = index_nullity_from_json<double>(j);
    EXPECT_TRUE(back == r);
  }
}

TEST(Serialize, SpectrumEntryRoundTrip) {
  const auto lat = validate<Rational>(C{1, 0}, C{0, 1});
  const auto vs = build(lat, 1, 0);
  const auto entries = enumerate_spectrum(vs, 25.0, ThetaVariant::Paper);
  ASSERT_FALSE(entries.empty());
  for (const auto& e : entries) {
    const auto back = spectrum_entry_from_json<Rational>(spectrum_entry_to_json(e));
    EXPECT_TRUE(back == e);
  }
}

TEST(Serialize, SpectrumCsvShape) {
  const auto lat = validate<Rational>(C{1, 0}, C{0, 1});
  const auto vs = build(lat, 1, 0);
  const auto entries = enumerate_spectrum(vs, 0.0, ThetaVariant::Paper);
  const std::string csv = spectrum_to_csv(entries);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,l,theta,lambda_minus,lambda_plus");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            entries.size() + 1);
}

TEST(Serialize, RatioCsvShape) {
  const auto lat = validate<Rational>(C{1, 0}, C{0, 1});
  const auto rows = ratio_table(lat, 1, 0, 3, ThetaVariant::Paper);
  const std::string csv = ratio_table_to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,n,m,energy,index,ratio,limit");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(Serialize, RatioSampleRoundTrip) {
  const auto lat = validate<Rational>(C{1, 0}, C{0, 1});
  for (const auto& row : ratio_table(lat, 2, 1, 4, ThetaVariant::Paper)) {
    EXPECT_TRUE(ratio_sample_from_json(ratio_sample_to_json(row)) == row);
  }
}

TEST(Serialize, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, kPi, -2.5e-17, 12345.678901234567}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

}  // namespace
}  // namespace vacindex
