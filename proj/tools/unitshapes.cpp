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

// unitshapes: shape clouds, coverage, verification and target search.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget or precision exhaustion.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "unitshapes/cli_runner.hpp"
#include "unitshapes/error.hpp"

using namespace unitshapes;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kExhausted = 3 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionExhausted:
    case ErrorKind::BudgetExhausted:
    case ErrorKind::CertificateFailed:
    case ErrorKind::NotCertified:
      return kExhausted;
    default:
      return kUsage;
  }
}

struct Options {
  int precision_bits = Precision::kDefaultBits;
  int jobs = 1;
  std::string format = "csv";
  std::string out;

  int j_max = 199;
  std::string a2 = "5^200";

  int n = 10;
  std::string box = "1:10,1:10,1:10";

  std::string cloud;
  std::string region = "-0.5:0.5,1:2";
  int grid = 5;
  double radius = 0.1;

  std::string suite = "all";

  std::string a1_shape, a2_shape;
  std::string cdr;

  std::string target;
  double eps = 0.1;
  long budget = TargetSearch{}.budget;
  int base_depth = TargetSearch{}.base_depth;
};

// Writes to --out when given, stdout otherwise. Output is assembled first so
// a failing command leaves no partial file.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  require(static_cast<bool>(f), ErrorKind::InvalidParams, "cannot open " + opt.out);
  f << text;
  require(static_cast<bool>(f), ErrorKind::InvalidParams, "cannot write " + opt.out);
}

std::string records_text(const std::vector<CloudRecord>& recs, const Options& opt) {
  std::ostringstream s;
  write_records(s, recs, parse_format(opt.format), Precision(opt.precision_bits));
  return s.str();
}

std::array<double, 2> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  require(comma != std::string::npos, ErrorKind::Parse, "expected RE,IM");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "expected RE,IM, got '" + text + "'");
  }
}

std::array<int, 3> parse_cdr(const std::string& text) {
  std::array<int, 3> out{};
  std::istringstream s(text);
  char sep1 = 0, sep2 = 0;
  s >> out[0] >> sep1 >> out[1] >> sep2 >> out[2];
  require(s && sep1 == ',' && sep2 == ',' && s.peek() == EOF, ErrorKind::Parse,
          "expected c,d,r, got '" + text + "'");
  return out;
}

int cmd_family(const Options& opt) {
  const Precision prec(opt.precision_bits);
  emit(opt, records_text(family_cloud(opt.j_max, parse_bigint(opt.a2), prec, opt.jobs), opt));
  return kOk;
}

int cmd_suborders(const Options& opt) {
  const Precision prec(opt.precision_bits);
  emit(opt, records_text(suborder_records(opt.n, parse_box(opt.box), prec, opt.jobs), opt));
  return kOk;
}

int cmd_coverage(const Options& opt) {
  std::ifstream f(opt.cloud);
  require(static_cast<bool>(f), ErrorKind::InvalidParams, "cannot open " + opt.cloud);
  const CoverageReport rep = coverage(read_cloud_points(f), parse_region(opt.region), opt.grid, opt.radius);
  emit(opt, coverage_json(rep) + "\n");
  return kOk;
}

int cmd_verify(const Options& opt) {
  const auto checks = run_verify(opt.suite, Precision(opt.precision_bits));
  emit(opt, verify_json(opt.suite, checks) + "\n");
  for (const CheckResult& c : checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.detail.empty()) std::cerr << " (" << c.detail << ")";
    std::cerr << '\n';
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  return ok ? kOk : kVerifyFailed;
}

int cmd_shape(const Options& opt) {
  const Precision prec(opt.precision_bits);
  std::optional<std::array<int, 3>> cdr;
  if (!opt.cdr.empty()) cdr = parse_cdr(opt.cdr);
  const CloudRecord rec = shape_record(parse_bigint(opt.a1_shape), parse_bigint(opt.a2_shape), cdr, prec);
  emit(opt, records_text({rec}, opt));
  return kOk;
}

int cmd_approx(const Options& opt) {
  const Precision prec(opt.precision_bits);
  const auto [re, im] = parse_pair(opt.target);
  TargetSearch search;
  search.budget = opt.budget;
  search.base_depth = opt.base_depth;
  search.jobs = opt.jobs;
  try {
    const TargetHit hit = approx_target(Complex::from_doubles(re, im, prec.bits),
                                        Real(opt.eps, prec.bits), search, prec);
    emit(opt, target_json(hit, true, prec) + "\n");
    return kOk;
  } catch (const TargetNotReached& e) {
    emit(opt, target_json(e.best(), false, prec) + "\n");
    std::cerr << e.what() << '\n';
    return kExhausted;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shapes of unit lattices of cubic orders X(X-a1)(X-a2) - 1 and their suborders"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--precision-bits", opt.precision_bits, "working precision in bits")
      ->check(CLI::Range(64, 1 << 20));
  app.add_option("--jobs", opt.jobs, "worker threads; 0 = all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--format", opt.format, "record format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out, "output file (default stdout)");

  auto* family = app.add_subcommand("cloud-family", "shapes of the orders a1 = 5^j, j = 1..j_max");
  family->add_option("--j-max", opt.j_max, "largest exponent j")->check(CLI::NonNegativeNumber);
  family->add_option("--a2", opt.a2, "a2 as a decimal or b^e");

  auto* sub = app.add_subcommand("cloud-suborders", "shapes of Z + 2^c 3^d 5^r O for the CRT order");
  sub->add_option("--n", opt.n, "CRT congruence depth")->check(CLI::PositiveNumber);
  sub->add_option("--box", opt.box, "exponent ranges c0:c1,d0:d1,r0:r1");

  auto* cov = app.add_subcommand("coverage", "distances from a probe grid to a shape cloud");
  cov->add_option("--cloud", opt.cloud, "cloud file (CSV or JSON lines)")->required();
  cov->add_option("--region", opt.region, "probe rectangle re0:re1,im0:im1");
  cov->add_option("--grid", opt.grid, "probes per side")->check(CLI::PositiveNumber);
  cov->add_option("--radius", opt.radius, "coverage radius")->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "invariant batteries");
  ver->add_option("suite", opt.suite, "roots, units, snf, lattices, s-sets, positive-units or all");

  auto* shape = app.add_subcommand("shape", "shape of one order or suborder");
  shape->add_option("--a1", opt.a1_shape)->required();
  shape->add_option("--a2", opt.a2_shape)->required();
  shape->add_option("--cdr", opt.cdr, "suborder exponents c,d,r");

  auto* approx = app.add_subcommand("approx", "suborder shape near a target");
  approx->add_option("--target", opt.target, "target RE,IM in the fundamental domain")->required();
  approx->add_option("--eps", opt.eps, "hyperbolic distance goal")->check(CLI::PositiveNumber);
  approx->add_option("--budget", opt.budget, "exact shape evaluations")->check(CLI::PositiveNumber);
  approx->add_option("--base-depth", opt.base_depth, "depth of the starting cloud")->check(CLI::Range(4, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*family) return cmd_family(opt);
    if (*sub) return cmd_suborders(opt);
    if (*cov) return cmd_coverage(opt);
    if (*ver) return cmd_verify(opt);
    if (*shape) return cmd_shape(opt);
    if (*approx) return cmd_approx(opt);
  } catch (const Error& e) {
    std::cerr << "unitshapes: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kUsage;
}
