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

#include "unitshapes/cli_runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "unitshapes/cloud_kernels.hpp"
#include "unitshapes/error.hpp"
#include "unitshapes/exact_order.hpp"
#include "unitshapes/lattice_lab.hpp"
#include "unitshapes/parallel.hpp"

namespace unitshapes {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<long, 3> kPrimes = {2, 3, 5};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  for (std::size_t start = 0;;) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

template <class T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  require(ec == std::errc() && ptr == s.data() + s.size(), ErrorKind::Parse,
          "bad " + std::string(what) + ": '" + std::string(s) + "'");
  return value;
}

std::array<double, 2> parse_double_range(std::string_view s) {
  const auto parts = split(s, ':');
  require(parts.size() == 2, ErrorKind::Parse, "expected lo:hi, got '" + std::string(s) + "'");
  return {parse_number<double>(parts[0], "bound"), parse_number<double>(parts[1], "bound")};
}

std::array<int, 2> parse_int_range(std::string_view s) {
  const auto parts = split(s, ':');
  require(parts.size() == 2, ErrorKind::Parse, "expected lo:hi, got '" + std::string(s) + "'");
  return {parse_number<int>(parts[0], "exponent"), parse_number<int>(parts[1], "exponent")};
}

CloudRecord from_shape(const OrderParams& params, std::optional<std::array<int, 3>> cdr,
                       const ShapePoint& s, bool certified) {
  return CloudRecord{params.a1(), params.a2(), cdr, s.tau, s.boundary_flag, certified};
}

Json record_json(const CloudRecord& rec, Precision prec) {
  Json j;
  j["a1"] = rec.a1.get_str();
  j["a2"] = rec.a2.get_str();
  for (int k = 0; k < 3; ++k) {
    const char* key = k == 0 ? "c" : k == 1 ? "d" : "r";
    j[key] = rec.cdr ? Json((*rec.cdr)[k]) : Json(nullptr);
  }
  j["re_tau"] = rec.tau ? Json(format_real(rec.tau->re, prec)) : Json(nullptr);
  j["im_tau"] = rec.tau ? Json(format_real(rec.tau->im, prec)) : Json(nullptr);
  j["boundary"] = rec.boundary;
  j["certified"] = rec.certified;
  return j;
}

// Collects one CheckResult per named check.
class Battery {
 public:
  explicit Battery(std::string suite) : suite_(std::move(suite)) {}
  void check(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({suite_, std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::string count_detail(int passed, int total) {
  return std::to_string(passed) + "/" + std::to_string(total);
}

const LocalDataTriple& data235() {
  static const LocalDataTriple d = canonical_local_data(kPrimes);
  return d;
}

std::vector<CheckResult> verify_roots(Precision prec) {
  Battery b("roots");
  std::vector<std::pair<BigInt, BigInt>> params = {{3, 4}, {5, 7}, {10, 27}, {16, 17}, {26, 51}, {676, 801}};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(3, 100000);
  while (params.size() < 40) {
    long a1 = dist(rng), a2 = dist(rng);
    if (a1 == a2) continue;
    if (a1 > a2) std::swap(a1, a2);
    params.emplace_back(a1, a2);
  }
  const int bits = prec.bits;
  int brackets = 0, vieta = 0, disc = 0;
  for (const auto& [a1, a2] : params) {
    const OrderParams p(a1, a2);
    const RootTriple t = isolate_roots(p, prec);
    brackets += t.alpha().lower() > 0L && t.alpha().upper() < 1L &&
                t.alpha1().lower() > Real(a1 - 1, bits) && t.alpha1().upper() < Real(a1, bits) &&
                t.alpha2().lower() > Real(a2, bits) && t.alpha2().upper() < Real(a2 + 1, bits);
    const Real slack = Real::pow2(-(bits / 2), bits);
    const Ball prod = t.roots[0].value() * t.roots[1].value() * t.roots[2].value();
    const Ball sum = t.roots[0].value() + t.roots[1].value() + t.roots[2].value();
    vieta += abs(prod.mid - Real(1L, bits)) <= add_up(prod.rad, slack) &&
             abs(sum.mid - p.trace()) <= add_up(sum.rad, slack * Real(a2, bits));
    const Ball d01 = t.roots[0].value() - t.roots[1].value();
    const Ball d02 = t.roots[0].value() - t.roots[2].value();
    const Ball d12 = t.roots[1].value() - t.roots[2].value();
    const Ball sq = d01 * d01 * d02 * d02 * d12 * d12;
    const Real exact(discriminant_exact(p), bits);
    disc += abs(sq.mid - exact) <= add_up(sq.rad, slack * exact);
  }
  const int n = static_cast<int>(params.size());
  b.check("root brackets alpha in (0,1), alpha1 in (a1-1,a1), alpha2 in (a2,a2+1)", brackets == n,
          count_detail(brackets, n));
  b.check("Vieta: product 1, sum a1 + a2", vieta == n, count_detail(vieta, n));
  b.check("discriminant equals prod (alpha_i - alpha_j)^2", disc == n, count_detail(disc, n));

  const OrderParams huge(pow(BigInt(5), 199), pow(BigInt(5), 200));
  const RootTriple t = isolate_roots(huge, prec);
  bool ok = true;
  for (const auto& r : t.roots) ok = ok && r.offset.relative_radius() < Real::pow2(-(bits / 2), bits);
  b.check("anchored roots at (5^199, 5^200) are resolved", ok);
  b.check("discriminant(5,7) == 5521", discriminant_exact(OrderParams(5, 7)) == 5521);
  return b.take();
}

std::vector<CheckResult> verify_units(Precision prec) {
  Battery b("units");
  const RegulatorReport rep = certify_fundamental_units(OrderParams(5, 7), prec);
  b.check("(5,7): disc 5521 and index bound < 2", rep.disc == 5521 && rep.certified,
          "index_bound_upper=" + rep.index_bound_upper.to_string(12));

  int certified = 0;
  std::string worst;
  Real worst_bound(0L, prec.bits);
  for (int n = 2; n <= 10; ++n) {
    CrtSpec spec;
    spec.n = n;
    const OrderParams p = crt_params(spec, prec);
    const RegulatorReport r = certify_fundamental_units(p, prec);
    certified += r.certified;
    if (r.index_bound_upper > worst_bound) {
      worst_bound = r.index_bound_upper;
      worst = "N=" + std::to_string(n);
    }
  }
  b.check("CRT orders N in [2,10] certified", certified == 9,
          count_detail(certified, 9) + ", max bound " + worst_bound.to_string(6) + " at " + worst);

  struct Local {
    long a1, a2, p;
    UnitSelector u;
    long l;
  };
  for (const Local& c : {Local{16, 17, 2, UnitSelector::B1, 7}, Local{10, 27, 3, UnitSelector::B1, 8},
                         Local{26, 51, 5, UnitSelector::B2, 24}}) {
    const PrimeLocalData d = local_orders(OrderParams(c.a1, c.a2), c.p, c.u);
    b.check("local_orders p=" + std::to_string(c.p), d.l == c.l && d.j == 1,
            "(l, j) = (" + std::to_string(d.l) + ", " + std::to_string(d.j) + ")");
  }

  const OrderParams p(5, 7);
  bool inverses = true;
  for (auto u : {UnitSelector::B1, UnitSelector::B2, UnitSelector::B3}) {
    inverses = inverses && mul_mod(OrderElement::unit(u, p), OrderElement::unit_inverse(u, p), p) ==
                               OrderElement::constant(1);
  }
  const OrderElement prod = mul_mod(mul_mod(OrderElement::unit(UnitSelector::B1, p),
                                            OrderElement::unit(UnitSelector::B2, p), p),
                                    OrderElement::unit(UnitSelector::B3, p), p);
  b.check("unit inverses and b1 b2 b3 = 1", inverses && prod == OrderElement::constant(1));

  // psi(b1) + psi(b2) + psi(b3) = 0 and each lies in the trace-zero plane.
  const UnitData ud = analyze_units(p, prec);
  const LogEmbedding b3 = log_embedding(ud.roots, UnitSelector::B3, prec);
  bool plane = true;
  const Real slack = Real::pow2(-(prec.bits / 2), prec.bits);
  for (int i = 0; i < 3; ++i) {
    plane = plane && abs((ud.psi_b1.coords[i] + ud.psi_b2.coords[i] + b3.coords[i]).mid) <= slack;
  }
  plane = plane && abs(ud.psi_b1.sum().mid) <= slack && abs(ud.psi_b2.sum().mid) <= slack;
  b.check("log embeddings sum to zero", plane);
  return b.take();
}

std::vector<CheckResult> verify_snf() {
  Battery b("snf");
  const IntMatrix m{{1, 1}, {2, -1}, {1, -2}};
  const SNFResult s = snf_3x2(m);
  b.check("M = (1 1; 2 -1; 1 -2) -> diag(1, 3)",
          s.D == IntMatrix{{1, 0}, {0, 3}, {0, 0}} && s.U * m * s.V == s.D &&
              abs(s.U.determinant()) == 1 && abs(s.V.determinant()) == 1);

  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(-20, 20);
  int done = 0, ok = 0;
  while (done < 200) {
    const IntMatrix a{{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}};
    bool rank2 = false;
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
      rank2 = rank2 || a(i, 0) * a(j, 1) - a(i, 1) * a(j, 0) != 0;
    }
    if (!rank2) continue;
    ++done;
    const SNFResult r = snf_3x2(a);
    ok += r.U * a * r.V == r.D && abs(r.U.determinant()) == 1 && abs(r.V.determinant()) == 1 &&
          r.d1() > 0 && mpz_divisible_p(r.d2().get_mpz_t(), r.d1().get_mpz_t()) != 0 &&
          r.D(0, 1) == 0 && r.D(1, 0) == 0 && r.D(2, 0) == 0 && r.D(2, 1) == 0;
  }
  b.check("random rank-2 matrices: U M V = D, d1 | d2", ok == done, count_detail(ok, done));
  return b.take();
}

// HNF of a congruence solution lattice by direct search; cost ~ lcm + index.
IntMatrix brute_hnf(const CongruenceSystem& sys) {
  long h11 = 1;
  while (!sys.holds(h11, 0)) ++h11;
  for (long n = 1;; ++n)
    for (long m = 0; m < h11; ++m)
      if (sys.holds(m, n)) return IntMatrix{{h11, m}, {0, n}};
}

std::vector<CheckResult> verify_lattices() {
  Battery b("lattices");
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-40, 40), nrows(1, 3), mod(1, 400);
  int done = 0, ok = 0;
  while (done < 50) {
    CongruenceSystem sys;
    long product = 1;
    const long k = nrows(rng);
    for (long i = 0; i < k; ++i) {
      const long m = mod(rng);
      product *= m;
      sys.rows.push_back({coef(rng), coef(rng), m});
    }
    if (product > 100000) continue;
    ++done;
    const IntLattice2 l = solve_congruences(sys);
    const IntMatrix h = brute_hnf(sys);
    ok += l.hnf() == h && l.index() == h(0, 0) * h(1, 1);
  }
  b.check("solve_congruences matches brute force (50 systems)", ok == done, count_detail(ok, done));

  int fact = 0;
  for (int c = 4; c <= 8; ++c)
    for (int d = 2; d <= 6; ++d)
      for (int r = 2; r <= 6; ++r) fact += verify_factorization(c, d, r, unit_exponent_lattice({c, d, r}, data235()));
  b.check("L = g Lambda on [4,8]x[2,6]x[2,6]", fact == 125, count_detail(fact, 125));

  const IntLattice2 l = unit_exponent_lattice({4, 2, 2}, data235());
  const IntMatrix g = factorization_matrix();
  int rejected = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (long delta : {-1, 1}) {
        IntMatrix m = g;
        m(i, j) += delta;
        rejected += !verify_factorization(4, 2, 2, l, m);
      }
  b.check("single-entry mutations of g rejected at (4,2,2)", rejected == 8, count_detail(rejected, 8));
  return b.take();
}

std::vector<CheckResult> verify_s_sets() {
  Battery b("s-sets");
  int ok = 0;
  std::string worst;
  for (int c = 3; c <= 12; ++c) {
    const ResidueSet s = s_set(c);
    long gap = 0;
    for (std::size_t i = 1; i < s.elements.size(); ++i) {
      gap = std::max(gap, s.elements[i] - s.elements[i - 1]);
    }
    const bool pass = s.elements == s_set_closed_form(c) &&
                      s.elements.size() == (3UL << (c - 2)) && s.elements.front() == 1 &&
                      s.elements.back() == (7L << c) - 11 && gap <= 20;
    ok += pass;
    if (!pass) worst += " c=" + std::to_string(c);
  }
  b.check("S_c closed form, size 3 2^(c-2), min 1, max 7 2^c - 11, gaps <= 20, c in [3,12]",
          ok == 10, count_detail(ok, 10) + worst);

  int orders = 0;
  for (int c = 3; c <= 20; ++c) {
    const auto uc = static_cast<unsigned long>(c);
    orders += mult_order(5, pow(BigInt(2), uc)) == pow(BigInt(2), uc - 2);
  }
  b.check("mult_order(5, 2^c) = 2^(c-2), c in [3,20]", orders == 18, count_detail(orders, 18));
  b.check("mult_order(5, 7) = 6", mult_order(5, 7) == 6);
  return b.take();
}

std::vector<CheckResult> verify_positive_units() {
  Battery b("positive-units");
  const IntMatrix d12{{1, 0}, {0, 2}};
  int ok = 0;
  for (int c = 1; c <= 6; ++c)
    for (int d = 1; d <= 6; ++d)
      for (int r = 1; r <= 6; ++r) {
        const IntLattice2 l = unit_exponent_lattice({c, d, r}, data235());
        ok += positive_unit_lattice({c, d, r}, data235()).transformed(d12) == l;
      }
  b.check("diag(1,2) L' = L on [1,6]^3", ok == 216, count_detail(ok, 216));
  return b.take();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  fail(ErrorKind::Parse, "unknown format '" + std::string(name) + "'");
}

int output_digits(Precision prec) {
  return std::max(1, static_cast<int>(std::floor(prec.bits / 3.32)));
}

std::string format_real(const Real& x, Precision prec) { return x.to_string(output_digits(prec)); }

std::vector<CloudRecord> family_cloud(int j_max, const BigInt& a2, Precision prec, int jobs) {
  require(j_max >= 0, ErrorKind::InvalidParams, "j_max must be >= 0");
  require(j_max == 0 || pow(BigInt(5), static_cast<unsigned long>(j_max)) < a2,
          ErrorKind::InvalidParams, "need 5^j_max < a2");
  const IntLattice2 whole = IntLattice2::from_generators(IntMatrix::identity(2));
  return parallel_map(static_cast<std::size_t>(j_max), jobs, [&](std::size_t i) {
    const OrderParams params(pow(BigInt(5), i + 1), a2);
    try {
      const OrderEmbedding emb = embed_order(params, prec);
      return from_shape(params, std::nullopt, shape_of_lattice(emb, whole, prec), emb.certified());
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted) throw;
      return CloudRecord{params.a1(), params.a2(), std::nullopt, std::nullopt, false, false};
    }
  });
}

std::vector<CloudRecord> suborder_records(int n, const ExponentBox& box, Precision prec, int jobs) {
  CrtSpec spec;
  spec.n = n;
  std::vector<CloudRecord> out;
  for (const SuborderShape& s : suborder_cloud(spec, box, prec, jobs)) {
    out.push_back(from_shape(s.params, s.cdr, s.shape, true));
  }
  return out;
}

CloudRecord shape_record(const BigInt& a1, const BigInt& a2,
                         const std::optional<std::array<int, 3>>& cdr, Precision prec) {
  const OrderParams params(a1, a2);
  if (!cdr) {
    const OrderEmbedding emb = embed_order(params, prec);
    const IntLattice2 whole = IntLattice2::from_generators(IntMatrix::identity(2));
    return from_shape(params, cdr, shape_of_lattice(emb, whole, prec), emb.certified());
  }
  const SuborderParams sp(kPrimes, *cdr, params);
  const IntLattice2 l = unit_exponent_lattice(*cdr, suborder_local_data(sp));
  const Precision p = sublattice_precision(l.index(), prec);
  const OrderEmbedding emb = embed_order(params, p);
  return from_shape(params, cdr, shape_of_lattice(emb, l, p), emb.certified());
}

void write_header(std::ostream& out, Format format) {
  if (format == Format::Csv) out << "a1,a2,c,d,r,re_tau,im_tau,boundary,certified\n";
}

void write_record(std::ostream& out, const CloudRecord& rec, Format format, Precision prec) {
  if (format == Format::Json) {
    out << record_json(rec, prec).dump() << '\n';
    return;
  }
  out << rec.a1.get_str() << ',' << rec.a2.get_str();
  for (int k = 0; k < 3; ++k) {
    out << ',';
    if (rec.cdr) out << (*rec.cdr)[k];
  }
  out << ',';
  if (rec.tau) out << format_real(rec.tau->re, prec);
  out << ',';
  if (rec.tau) out << format_real(rec.tau->im, prec);
  out << ',' << (rec.boundary ? "true" : "false") << ',' << (rec.certified ? "true" : "false")
      << '\n';
}

void write_records(std::ostream& out, const std::vector<CloudRecord>& recs, Format format,
                   Precision prec) {
  write_header(out, format);
  for (const CloudRecord& r : recs) write_record(out, r, format, prec);
}

std::vector<std::complex<double>> read_cloud_points(std::istream& in) {
  std::vector<std::complex<double>> out;
  std::string line;
  for (long lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::string re, im;
    if (line[first] == '{') {
      Json j;
      try {
        j = Json::parse(line);
      } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + e.what());
      }
      if (!j.contains("re_tau") || j["re_tau"].is_null() || j["im_tau"].is_null()) continue;
      re = j["re_tau"].get<std::string>();
      im = j["im_tau"].get<std::string>();
    } else {
      if (line.rfind("a1,", first) == first) continue;  // header
      const auto fields = split(line, ',');
      require(fields.size() == 9, ErrorKind::Parse,
              "line " + std::to_string(lineno) + ": expected 9 CSV fields");
      if (fields[5].empty() || fields[6].empty()) continue;
      re = fields[5];
      im = fields[6];
    }
    try {
      out.emplace_back(std::stod(re), std::stod(im));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad shape coordinates");
    }
  }
  return out;
}

Region parse_region(std::string_view text) {
  const auto parts = split(text, ',');
  require(parts.size() == 2, ErrorKind::Parse, "region must be re0:re1,im0:im1");
  const auto re = parse_double_range(parts[0]), im = parse_double_range(parts[1]);
  require(re[0] <= re[1] && im[0] <= im[1] && im[0] > 0, ErrorKind::InvalidParams,
          "region needs lo <= hi and Im > 0");
  return {re[0], re[1], im[0], im[1]};
}

ExponentBox parse_box(std::string_view text) {
  const auto parts = split(text, ',');
  require(parts.size() == 3, ErrorKind::Parse, "box must be c0:c1,d0:d1,r0:r1");
  return {parse_int_range(parts[0]), parse_int_range(parts[1]), parse_int_range(parts[2])};
}

CoverageReport coverage(const std::vector<std::complex<double>>& cloud, const Region& region,
                        int grid, double radius) {
  require(!cloud.empty(), ErrorKind::EmptyCloud, "coverage needs a nonempty cloud");
  require(grid >= 1, ErrorKind::InvalidParams, "grid must be >= 1");
  require(radius >= 0, ErrorKind::InvalidParams, "radius must be >= 0");
  require(region.im_min > 0, ErrorKind::InvalidParams, "region must lie in Im > 0");

  std::vector<double> re, im;
  for (const auto& w : cloud) {
    require(w.imag() > 0, ErrorKind::NotInUpperHalfPlane, "cloud point below the real axis");
    const std::complex<double> s = -1.0 / w;
    for (const auto& v : {w, s}) {
      for (double shift : {0.0, 1.0, -1.0}) {
        re.push_back(v.real() + shift);
        im.push_back(v.imag());
      }
    }
  }
  const CloudView view{re.data(), im.data(), re.size()};

  CoverageReport rep;
  rep.radius = radius;
  auto axis = [grid](double lo, double hi, int k) {
    return grid == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (grid - 1);
  };
  std::vector<double> dists;
  for (int i = 0; i < grid; ++i)
    for (int k = 0; k < grid; ++k) {
      std::complex<double> z(std::clamp(axis(region.re_min, region.re_max, k), -0.5, 0.5),
                             axis(region.im_min, region.im_max, i));
      if (std::abs(z) < 1.0) z /= std::abs(z);
      const Nearest n = nearest(view, z.real(), z.imag());
      Probe p{z, key_to_distance(n.key, z.imag()), {re[n.index], im[n.index]}};
      dists.push_back(p.distance);
      rep.probes.push_back(p);
    }
  const auto covered = std::count_if(dists.begin(), dists.end(), [radius](double d) { return d <= radius; });
  rep.covered_fraction = static_cast<double>(covered) / static_cast<double>(dists.size());
  std::sort(dists.begin(), dists.end());
  rep.min = dists.front();
  rep.max = dists.back();
  const std::size_t mid = dists.size() / 2;
  rep.median = dists.size() % 2 ? dists[mid] : 0.5 * (dists[mid - 1] + dists[mid]);
  return rep;
}

std::string coverage_json(const CoverageReport& report) {
  Json j;
  j["probes"] = report.probes.size();
  j["radius"] = report.radius;
  j["covered_fraction"] = report.covered_fraction;
  j["min"] = report.min;
  j["median"] = report.median;
  j["max"] = report.max;
  j["kernel"] = std::string(to_string(active_isa()));
  Json probes = Json::array();
  for (const Probe& p : report.probes) {
    probes.push_back({{"re", p.z.real()}, {"im", p.z.imag()}, {"distance", p.distance},
                      {"nearest_re", p.nearest.real()}, {"nearest_im", p.nearest.imag()}});
  }
  j["probe_results"] = std::move(probes);
  return j.dump(2);
}

std::vector<CheckResult> run_verify(std::string_view suite, Precision prec) {
  const bool all = suite == "all";
  require(all || std::find(kVerifySuites.begin(), kVerifySuites.end(), suite) != kVerifySuites.end(),
          ErrorKind::InvalidParams, "unknown suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  auto add = [&](std::string_view name, auto&& run) {
    if (!all && suite != name) return;
    for (CheckResult& c : run()) out.push_back(std::move(c));
  };
  add("roots", [&] { return verify_roots(prec); });
  add("units", [&] { return verify_units(prec); });
  add("snf", [] { return verify_snf(); });
  add("lattices", [] { return verify_lattices(); });
  add("s-sets", [] { return verify_s_sets(); });
  add("positive-units", [] { return verify_positive_units(); });
  return out;
}

std::string verify_json(std::string_view suite, const std::vector<CheckResult>& checks) {
  Json j;
  j["suite"] = std::string(suite);
  j["passed"] = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    list.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = std::move(list);
  return j.dump(2);
}

std::string target_json(const TargetHit& hit, bool reached, Precision prec) {
  Json j;
  j["reached"] = reached;
  j["stage"] = hit.stage;
  j["distance"] = format_real(hit.distance, prec);
  j["evaluations"] = hit.evaluations;
  j["n"] = hit.point.n;
  j["record"] = record_json(from_shape(hit.point.params, hit.point.cdr, hit.point.shape, true), prec);
  return j.dump();
}

}  // namespace unitshapes
