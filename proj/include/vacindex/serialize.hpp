// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "vacindex/asymptotics.hpp"
#include "vacindex/spectrum.hpp"
#include "vacindex/vacuum.hpp"

namespace vacindex {

using nlohmann::json;

/// Shortest round-trippable decimal form.
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Scalars: exact values travel as rational strings, floats as numbers.
inline json scalar_to_json(const Rational& x) { return format_rational(x); }
inline json scalar_to_json(double x) { return x; }

template <class S>
S scalar_from_json(const json& j) {
  if constexpr (is_exact_v<S>) {
    return parse_rational(j.get<std::string>());
  } else {
    return j.get<double>();
  }
}

template <class S>
json complex_to_json(const Complex<S>& z) {
  return json::array({scalar_to_json(z.re), scalar_to_json(z.im)});
}

template <class S>
Complex<S> complex_from_json(const json& j) {
  return {scalar_from_json<S>(j.at(0)), scalar_from_json<S>(j.at(1))};
}

/// Exact energies are rational multiples of pi^2; "q*pi^2" keeps them exact.
inline std::string energy_string(const Rational& energy_over_pi2) {
  return format_rational(energy_over_pi2) + "*pi^2";
}

inline json boundary_to_json(const std::vector<LatticePoint>& pts) {
  json arr = json::array();
  for (const auto& [k, l] : pts) arr.push_back(json::array({k, l}));
  return arr;
}

inline std::vector<LatticePoint> boundary_from_json(const json& arr) {
  std::vector<LatticePoint> pts;
  for (const auto& p : arr) pts.emplace_back(p.at(0).get<long long>(), p.at(1).get<long long>());
  return pts;
}

template <class S>
json index_nullity_to_json(const VacuumSolution<S>& vs, const IndexNullityResult<S>& r) {
  json j;
  j["backend"] = is_exact_v<S> ? "exact" : "float";
  j["omega1"] = complex_to_json(vs.lattice.omega1);
  j["omega2"] = complex_to_json(vs.lattice.omega2);
  j["n"] = vs.n;
  j["m"] = vs.m;
  j["variant"] = variant_name(r.variant);
  j["exact"] = r.exact;
  j["index"] = r.index;
  j["nullity"] = r.nullity;
  j["nullity_min"] = r.nullity_min;
  j["nullity_max"] = r.nullity_max;
  j["threshold"] = scalar_to_json(r.threshold);
  j["interior_points"] = r.interior_points;
  j["boundary_points"] = boundary_to_json(r.boundary_points);
  j["inexact_boundary"] = r.inexact_boundary;
  if constexpr (is_exact_v<S>) {
    j["energy"] = energy_string(vs.energy_over_pi2);
  } else {
    j["energy"] = vs.energy();
  }
  j["energy_decimal"] = vs.energy();
  return j;
}

template <class S>
IndexNullityResult<S> index_nullity_from_json(const json& j) {
  IndexNullityResult<S> r;
  r.index = j.at("index").get<long long>();
  r.nullity = j.at("nullity").get<long long>();
  r.nullity_min = j.at("nullity_min").get<long long>();
  r.nullity_max = j.at("nullity_max").get<long long>();
  r.threshold = scalar_from_json<S>(j.at("threshold"));
  r.interior_points = j.at("interior_points").get<long long>();
  r.boundary_points = boundary_from_json(j.at("boundary_points"));
  r.variant = j.at("variant").get<std::string>() == "paper" ? ThetaVariant::Paper
                                                            : ThetaVariant::Dual;
  r.exact = j.at("exact").get<bool>();
  r.inexact_boundary = j.at("inexact_boundary").get<bool>();
  return r;
}

template <class S>
bool operator==(const IndexNullityResult<S>& a, const IndexNullityResult<S>& b) {
  return a.index == b.index && a.nullity == b.nullity && a.nullity_min == b.nullity_min &&
         a.nullity_max == b.nullity_max && a.threshold == b.threshold &&
         a.interior_points == b.interior_points && a.boundary_points == b.boundary_points &&
         a.variant == b.variant && a.exact == b.exact &&
         a.inexact_boundary == b.inexact_boundary;
}

template <class S>
json spectrum_entry_to_json(const SpectrumEntry<S>& e) {
  json j;
  j["k"] = e.k;
  j["l"] = e.l;
  j["theta"] = scalar_to_json(e.theta_value);
  j["lambda_minus_over_pi2"] = scalar_to_json(e.lambda_minus_over_pi2);
  j["lambda_plus_over_pi2"] = scalar_to_json(e.lambda_plus_over_pi2);
  j["lambda_minus"] = e.lambda_minus();
  j["lambda_plus"] = e.lambda_plus();
  return j;
}

template <class S>
SpectrumEntry<S> spectrum_entry_from_json(const json& j) {
  SpectrumEntry<S> e;
  e.k = j.at("k").get<long long>();
  e.l = j.at("l").get<long long>();
  e.theta_value = scalar_from_json<S>(j.at("theta"));
  e.lambda_minus_over_pi2 = scalar_from_json<S>(j.at("lambda_minus_over_pi2"));
  e.lambda_plus_over_pi2 = scalar_from_json<S>(j.at("lambda_plus_over_pi2"));
  return e;
}

template <class S>
bool operator==(const SpectrumEntry<S>& a, const SpectrumEntry<S>& b) {
  return a.k == b.k && a.l == b.l && a.theta_value == b.theta_value &&
         a.lambda_minus_over_pi2 == b.lambda_minus_over_pi2 &&
         a.lambda_plus_over_pi2 == b.lambda_plus_over_pi2;
}

template <class S>
std::string spectrum_to_csv(const std::vector<SpectrumEntry<S>>& entries) {
  std::string out = "k,l,theta,lambda_minus,lambda_plus\n";
  for (const auto& e : entries) {
    out += std::to_string(e.k) + ',' + std::to_string(e.l) + ',';
    out += format_double(to_double(e.theta_value)) + ',';
    out += format_double(e.lambda_minus()) + ',' + format_double(e.lambda_plus()) + '\n';
  }
  return out;
}

inline std::string ratio_table_to_csv(const std::vector<RatioSample>& rows) {
  std::string out = "t,n,m,energy,index,ratio,limit\n";
  for (const auto& r : rows) {
    out += std::to_string(r.t) + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',';
    out += format_double(r.energy) + ',' + std::to_string(r.index) + ',';
    out += format_double(r.ratio) + ',' + format_double(r.limit) + '\n';
  }
  return out;
}

inline json ratio_sample_to_json(const RatioSample& r) {
  return json{{"t", r.t},         {"n", r.n},         {"m", r.m},    {"energy", r.energy},
              {"index", r.index}, {"ratio", r.ratio}, {"limit", r.limit}};
}

inline RatioSample ratio_sample_from_json(const json& j) {
  RatioSample r;
  r.t = j.at("t").get<long long>();
  r.n = j.at("n").get<long long>();
  r.m = j.at("m").get<long long>();
  r.energy = j.at("energy").get<double>();
  r.index = j.at("index").get<long long>();
  r.ratio = j.at("ratio").get<double>();
  r.limit = j.at("limit").get<double>();
  return r;
}

inline bool operator==(const RatioSample& a, const RatioSample& b) {
  return a.t == b.t && a.n == b.n && a.m == b.m && a.energy == b.energy &&
         a.index == b.index && a.ratio == b.ratio && a.limit == b.limit;
}

}  // namespace vacindex
