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

// Shape clouds as records, their CSV / JSON-lines forms, coverage probes and
// the verification batteries behind the command-line tool.

#ifndef UNITSHAPES_CLI_RUNNER_HPP_
#define UNITSHAPES_CLI_RUNNER_HPP_

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unitshapes/numeric.hpp"
#include "unitshapes/param_forge.hpp"
#include "unitshapes/shape_space.hpp"

namespace unitshapes {

struct CloudRecord {
  BigInt a1, a2;
  std::optional<std::array<int, 3>> cdr;  // absent for plain orders
  std::optional<Complex> tau;             // absent if the shape could not be computed
  bool boundary = false;
  bool certified = false;
};

enum class Format { Csv, Json };

Format parse_format(std::string_view name);

// precision_bits / 3.32 significant digits, round-half-even.
int output_digits(Precision prec);
std::string format_real(const Real& x, Precision prec);

// One record per a1 = 5^j, 1 <= j <= j_max. Uncertified orders keep their
// record with certified = false.
std::vector<CloudRecord> family_cloud(int j_max, const BigInt& a2, Precision prec, int jobs = 1);

// One record per (c, d, r) in the box, for the CRT order at depth n.
std::vector<CloudRecord> suborder_records(int n, const ExponentBox& box, Precision prec,
                                          int jobs = 1);

// Single order, or its suborder Z + 2^c 3^d 5^r O when cdr is given.
CloudRecord shape_record(const BigInt& a1, const BigInt& a2,
                         const std::optional<std::array<int, 3>>& cdr, Precision prec);

void write_header(std::ostream& out, Format format);
void write_record(std::ostream& out, const CloudRecord& rec, Format format, Precision prec);
void write_records(std::ostream& out, const std::vector<CloudRecord>& recs, Format format,
                   Precision prec);

// Accepts either output format; records without a shape are skipped.
std::vector<std::complex<double>> read_cloud_points(std::istream& in);

struct Region {
  double re_min = -0.5, re_max = 0.5, im_min = 1.0, im_max = 2.0;
};

Region parse_region(std::string_view text);  // "re0:re1,im0:im1"
ExponentBox parse_box(std::string_view text);  // "c0:c1,d0:d1,r0:r1"

struct Probe {
  std::complex<double> z;
  double distance = 0.0;
  std::complex<double> nearest;
};

struct CoverageReport {
  std::vector<Probe> probes;
  double radius = 0.0;
  double covered_fraction = 0.0;
  double min = 0.0, median = 0.0, max = 0.0;
};

// grid x grid probes spread evenly over the region and clipped into the
// fundamental domain. Distances are taken on the modular surface, as the
// minimum over the cloud images under 1, T, T^-1, S, TS, T^-1 S; this is
// exact for probes and points in the fundamental domain. EmptyCloud if
// there are no points.
CoverageReport coverage(const std::vector<std::complex<double>>& cloud, const Region& region,
                        int grid, double radius);

std::string coverage_json(const CoverageReport& report);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::array<std::string_view, 6> kVerifySuites = {
    "roots", "units", "snf", "lattices", "s-sets", "positive-units"};

// suite is one of kVerifySuites or "all"; InvalidParams otherwise.
std::vector<CheckResult> run_verify(std::string_view suite, Precision prec);

std::string verify_json(std::string_view suite, const std::vector<CheckResult>& checks);

std::string target_json(const TargetHit& hit, bool reached, Precision prec);

}  // namespace unitshapes

#endif  // UNITSHAPES_CLI_RUNNER_HPP_
