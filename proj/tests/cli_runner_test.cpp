// Copyright 2026 The unitshapes Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "unitshapes/cli_runner.hpp"
#include "unitshapes/error.hpp"

using namespace unitshapes;

namespace {

const Precision kPrec(256);

std::string csv_of(const std::vector<CloudRecord>& recs, Format f = Format::Csv) {
  std::ostringstream s;
  write_records(s, recs, f, kPrec);
  return s.str();
}

}  // namespace

TEST_CASE("decimal output") {
  CHECK(output_digits(Precision(256)) == 77);
  CHECK(output_digits(Precision(64)) == 19);
  // Ties go to the even digit.
  CHECK(Real(0.125, 64).to_string(2) == "1.2e-01");
  CHECK(Real(0.375, 64).to_string(2) == "3.8e-01");
  CHECK(Real(2.5, 64).to_string(1) == "2e+00");
}

TEST_CASE("family cloud: small and empty") {
  const auto recs = family_cloud(3, pow(BigInt(5), 10), kPrec);
  REQUIRE(recs.size() == 3);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].a1 == pow(BigInt(5), i + 1));
    CHECK(recs[i].certified);
    REQUIRE(recs[i].tau.has_value());
    CHECK(distance_to_arc(*recs[i].tau, kPrec) <= Real(0.1, 256));
  }
  CHECK(family_cloud(0, pow(BigInt(5), 10), kPrec).empty());
  CHECK_THROWS_AS(family_cloud(10, pow(BigInt(5), 10), kPrec), Error);
}

TEST_CASE("family cloud at a2 = 5^200 sweeps the arc once") {
  const auto recs = family_cloud(199, pow(BigInt(5), 200), kPrec, 2);
  REQUIRE(recs.size() == 199);
  // Reduction folds Re < 0 onto Re > 0 along the arc; unfolded, the angle
  // runs monotonically from the hexagonal corner through i.
  std::vector<double> angle;
  for (const auto& r : recs) {
    REQUIRE(r.tau.has_value());
    CHECK(r.certified);
    CHECK(distance_to_arc(*r.tau, kPrec) <= Real(1e-3, 256));
    angle.push_back(std::atan2(r.tau->im.to_double(), r.tau->re.to_double()));
  }
  const auto peak = std::max_element(angle.begin(), angle.end()) - angle.begin();
  CHECK(peak == 72);  // j = 73, lambda = 0.365
  for (std::size_t i = static_cast<std::size_t>(peak) + 1; i < angle.size(); ++i) {
    angle[i] = std::numbers::pi - angle[i];
  }
  for (std::size_t i = 1; i < angle.size(); ++i) CHECK(angle[i] > angle[i - 1]);
}

TEST_CASE("suborder records at depth 2") {
  ExponentBox box;
  box.c = box.d = box.r = {1, 2};
  const auto recs = suborder_records(2, box, kPrec);
  REQUIRE(recs.size() == 8);
  for (const auto& r : recs) {
    CHECK(r.certified);
    CHECK(r.a1 == 676);
    CHECK(r.a2 == 801);
  }
  CHECK(recs[0].cdr == std::array<int, 3>{1, 1, 1});
  CHECK(recs[0].tau->re.to_double() == doctest::Approx(0.48885514966886389672).epsilon(1e-12));
  CHECK(recs[0].tau->im.to_double() == doctest::Approx(5.4876847900674651726).epsilon(1e-12));

  // Exponent 0 leaves that prime unconstrained, so the c = 0 row is not the
  // c = 1 row.
  box.c = {0, 1};
  box.d = box.r = {1, 1};
  const auto zero = suborder_records(2, box, kPrec);
  CHECK_FALSE(zero[0].tau->im == zero[1].tau->im);
}

TEST_CASE("single shapes") {
  const CloudRecord r = shape_record(5, 7, std::nullopt, kPrec);
  CHECK_FALSE(r.cdr.has_value());
  CHECK(r.tau->re.to_double() == doctest::Approx(-0.065826615784556944125).epsilon(1e-12));
  const CloudRecord s = shape_record(676, 801, std::array<int, 3>{1, 1, 1}, kPrec);
  CHECK(s.tau->im.to_double() == doctest::Approx(5.4876847900674651726).epsilon(1e-12));
  CHECK_THROWS_AS(shape_record(5, 7, std::array<int, 3>{3, 3, 3}, kPrec), Error);
}

TEST_CASE("CSV and JSON lines") {
  ExponentBox box;
  box.c = box.d = box.r = {1, 4};
  const auto one = suborder_records(4, box, kPrec, 1);
  const auto many = suborder_records(4, box, kPrec, 3);
  const std::string csv = csv_of(one);
  CHECK(csv == csv_of(many));
  CHECK(csv_of(one, Format::Json) == csv_of(many, Format::Json));
  CHECK(csv.rfind("a1,a2,c,d,r,re_tau,im_tau,boundary,certified\n", 0) == 0);

  std::istringstream in_csv(csv), in_json(csv_of(one, Format::Json));
  const auto pts = read_cloud_points(in_csv);
  const auto pts_json = read_cloud_points(in_json);
  REQUIRE(pts.size() == 64);
  CHECK(pts == pts_json);
  CHECK(pts[5].real() == doctest::Approx(one[5].tau->re.to_double()).epsilon(1e-15));

  // Plain orders leave c, d, r empty; missing shapes leave tau empty.
  CloudRecord blank{5, 7, std::nullopt, std::nullopt, false, false};
  const std::string line = csv_of({blank});
  CHECK(line.substr(line.find('\n') + 1) == "5,7,,,,,,false,false\n");
  std::istringstream in_blank(line);
  CHECK(read_cloud_points(in_blank).empty());
  std::istringstream bad("1,2,3\n");
  CHECK_THROWS_AS(read_cloud_points(bad), Error);
}

TEST_CASE("argument parsing") {
  const ExponentBox b = parse_box("1:3,2:4,0:5");
  CHECK(b.c == std::array<int, 2>{1, 3});
  CHECK(b.r == std::array<int, 2>{0, 5});
  CHECK_THROWS_AS(parse_box("1:3,2:4"), Error);
  CHECK_THROWS_AS(parse_box("1:x,2:4,0:5"), Error);
  const Region r = parse_region("-0.5:0.5,1:2");
  CHECK(r.re_min == -0.5);
  CHECK(r.im_max == 2.0);
  CHECK_THROWS_AS(parse_region("0:1,-1:2"), Error);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("coverage") {
  const std::vector<std::complex<double>> just_i = {{0.0, 1.0}};
  const CoverageReport single = coverage(just_i, {0.0, 0.0, 1.0, 1.0}, 1, 0.0);
  CHECK(single.covered_fraction == 1.0);
  CHECK(single.max == 0.0);
  CHECK_THROWS_AS(coverage({}, Region{}, 5, 0.1), Error);

  // Probes below the arc are pulled radially onto it.
  const CoverageReport low = coverage(just_i, {0.5, 0.5, 0.5, 0.5}, 1, 1.0);
  CHECK(std::abs(low.probes[0].z) == doctest::Approx(1.0));

  // The corner 1/2 + i sqrt(3)/2 is the T-image of the other corner.
  const double h = std::sqrt(3.0) / 2;
  const CoverageReport corner = coverage({{-0.5, h}}, {0.5, 0.5, h, h}, 1, 1e-9);
  CHECK(corner.max < 1e-7);

  // Sides Re = -1/2 and Re = 1/2 are identified.
  const CoverageReport side = coverage({{0.49, 1.5}}, {-0.49, -0.49, 1.5, 1.5}, 1, 0.1);
  CHECK(side.max < 0.02);

  const std::vector<std::complex<double>> grid_pts = {{0.0, 1.0}, {0.0, 2.0}, {0.3, 1.4}};
  const CoverageReport g = coverage(grid_pts, Region{}, 5, 0.3);
  CHECK(g.probes.size() == 25);
  CHECK(g.min <= g.median);
  CHECK(g.median <= g.max);
  CHECK(g.covered_fraction > 0.0);
}

TEST_CASE("verification suites pass") {
  for (std::string_view suite : kVerifySuites) {
    CAPTURE(suite);
    const auto checks = run_verify(suite, kPrec);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.suite == suite);
      CHECK(c.passed);
    }
  }
  CHECK(run_verify("all", kPrec).size() > 15);
  CHECK_THROWS_AS(run_verify("nope", kPrec), Error);
  const std::string json = verify_json("snf", run_verify("snf", kPrec));
  CHECK(json.find("\"passed\": true") != std::string::npos);
}
