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

// Suborder clouds and the target search built on them.

#include <algorithm>
#include <map>
#include <tuple>

#include "unitshapes/error.hpp"
#include "unitshapes/lattice_lab.hpp"
#include "unitshapes/parallel.hpp"
#include "unitshapes/param_forge.hpp"

namespace unitshapes {

namespace {

constexpr std::array<long, 3> kPrimes = {2, 3, 5};

// Depths beyond this make the sublattice indices (and the precision needed
// to reduce them) impractically large for an interactive search.
constexpr int kMaxSearchDepth = 600;

// a1, a2 ~ 30^n, so roots and their certificates at depth n need about
// 5 n bits beyond the working precision.
Precision depth_precision(int n, Precision prec) {
  const int bits = prec.bits + 12 * n;
  return Precision((bits + 63) / 64 * 64);
}

LocalDataTriple local_data_for(const OrderParams& params) {
  return suborder_local_data(SuborderParams(kPrimes, {1, 1, 1}, params));
}

// Real-linear map of the plane given by the images of e1 and e2.
struct PlaneMap {
  Complex c0, c1;

  Complex apply(const Real& u, const Real& v) const { return c0 * u + c1 * v; }

  // (u, v) with apply(u, v) = w, returned as u + iv.
  Complex solve(const Complex& w) const {
    const Real det = c0.re * c1.im - c1.re * c0.im;
    return {(w.re * c1.im - c1.re * w.im) / det, (c0.re * w.im - w.re * c0.im) / det};
  }
};

// w1 g00 + w2 g10, w1 g01 + w2 g11: the unit basis composed with g.
PlaneMap unit_map_times_g(const OrderEmbedding& emb, int bits) {
  const IntMatrix g = factorization_matrix();
  auto r = [bits](const BigInt& v) { return Real(v, bits); };
  const Complex& w1 = emb.basis.w1;
  const Complex& w2 = emb.basis.w2;
  return {w1 * r(g(0, 0)) + w2 * r(g(1, 0)), w1 * r(g(0, 1)) + w2 * r(g(1, 1))};
}

struct Candidate {
  int n;
  std::array<int, 3> cdr;
};

class Searcher {
 public:
  Searcher(const Complex& tau, const Real& eps, const TargetSearch& search, Precision prec)
      : tau_(tau), eps_(eps), search_(search), prec_(prec) {}

  TargetHit run();

 private:
  struct Depth {
    OrderParams params;
    LocalDataTriple data;
    std::map<int, OrderEmbedding> embeddings;  // by precision
  };

  Depth& depth(int n) {
    auto it = depths_.find(n);
    if (it == depths_.end()) {
      CrtSpec spec;
      spec.n = n;
      OrderParams params = crt_params(spec, depth_precision(n, prec_));
      LocalDataTriple data = local_data_for(params);
      it = depths_.emplace(n, Depth{std::move(params), std::move(data), {}}).first;
    }
    return it->second;
  }

  const OrderEmbedding& embedding(int n, int bits) {
    Depth& d = depth(n);
    auto it = d.embeddings.find(bits);
    if (it == d.embeddings.end()) it = d.embeddings.emplace(bits, embed_order(d.params, Precision(bits))).first;
    return it->second;
  }

  Real distance_to_target(const Complex& z) const { return hyperbolic_distance(tau_, z); }

  bool done() const { return best_ && best_->distance <= eps_; }
  bool out_of_budget() const { return evaluations_ >= search_.budget; }

  void consider(SuborderShape s, const char* stage) {
    Real d = distance_to_target(s.shape.tau);
    const bool better = !best_ || d < best_->distance ||
                        (d == best_->distance &&
                         std::tie(s.n, s.cdr) < std::tie(best_->point.n, best_->point.cdr));
    if (better) best_ = TargetHit{std::move(s), std::move(d), stage, 0};
  }

  // Exact shape of one suborder, at the precision its index calls for.
  SuborderShape evaluate(const Candidate& c) {
    ++evaluations_;
    Depth& d = depth(c.n);
    // Validates the suborder congruences at this depth.
    (void)SuborderParams(kPrimes, c.cdr, d.params);
    const IntLattice2 l = unit_exponent_lattice(c.cdr, d.data);
    const Precision p(std::max(sublattice_precision(l.index(), prec_).bits,
                               depth_precision(c.n, prec_).bits));
    const OrderEmbedding& emb = embedding(c.n, p.bits);
    return SuborderShape{c.n, d.params, c.cdr, shape_of_lattice(emb, l, p)};
  }

  void diagonal_stage(const std::vector<SuborderShape>& seeds);
  void horospherical_stage();

  Complex tau_;
  Real eps_;
  TargetSearch search_;
  Precision prec_;
  std::map<int, Depth> depths_;
  std::optional<TargetHit> best_;
  long evaluations_ = 0;
};

// Shape of (B g) diag(rho e^t, 1) inner: the diagonal flow applied to
// Lambda_{c,d,r} and pushed through the unit basis.
Real diagonal_model_distance(const PlaneMap& bg, const IntMatrix& inner, const Real& log_rho,
                             const Real& t, const Complex& tau, Precision prec) {
  const int bits = prec.bits;
  const Real s = exp(log_rho + t);
  auto r = [bits](const BigInt& v) { return Real(v, bits); };
  const PlaneBasis b{bg.apply(s * r(inner(0, 0)), r(inner(1, 0))),
                     bg.apply(s * r(inner(0, 1)), r(inner(1, 1)))};
  return hyperbolic_distance(tau, reduce_shape(b, prec).tau);
}

void Searcher::diagonal_stage(const std::vector<SuborderShape>& seeds) {
  const int bits = prec_.bits;
  const Real log3 = log(Real(3L, bits)), log5 = log(Real(5L, bits));
  for (const SuborderShape& seed : seeds) {
    if (done() || out_of_budget()) return;
    const auto [c, d, r] = seed.cdr;
    const IntMatrix inner =
        solve_congruences({{{pow(BigInt(3), d - 2), -pow(BigInt(5), r - 1),
                             BigInt(7) * pow(BigInt(2), static_cast<unsigned long>(c - 4))}}})
            .hnf();
    const Real log_rho = log3 * static_cast<long>(d - 2) - log5 * static_cast<long>(r - 1);

    int n = seed.n;
    std::optional<Candidate> cand;
    for (int round = 0; round < 4 && !cand; ++round) {
      const PlaneMap bg = unit_map_times_g(embedding(n, depth_precision(n, prec_).bits), bits);
      // Coarse scan of the flow time, then golden-section refinement.
      Real best_t(0L, bits), best_d = diagonal_model_distance(bg, inner, log_rho, best_t, tau_, prec_);
      for (int k = -128; k <= 128; ++k) {
        const Real t = Real(static_cast<long>(k), bits) / Real(16L, bits);
        Real dd = diagonal_model_distance(bg, inner, log_rho, t, tau_, prec_);
        if (dd < best_d) {
          best_d = std::move(dd);
          best_t = t;
        }
      }
      Real lo = best_t - Real(0.0625, bits), hi = best_t + Real(0.0625, bits);
      const Real invphi = (sqrt(Real(5L, bits)) - 1L) / Real(2L, bits);
      for (int it = 0; it < 40; ++it) {
        const Real x1 = hi - (hi - lo) * invphi, x2 = lo + (hi - lo) * invphi;
        if (diagonal_model_distance(bg, inner, log_rho, x1, tau_, prec_) <=
            diagonal_model_distance(bg, inner, log_rho, x2, tau_, prec_)) {
          hi = x2;
        } else {
          lo = x1;
        }
      }
      const Real t = half(lo + hi);
      // The flow orbit never comes closer than its model minimum.
      if (diagonal_model_distance(bg, inner, log_rho, t, tau_, prec_) >= best_->distance) break;
      DiagonalStep step;
      try {
        step = approx_diagonal(t, c, d, r, eps_ / Real(8L, bits), BigInt(1000000), prec_);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExhausted) throw;
        break;
      }
      const int need = static_cast<int>(std::max<BigInt>({BigInt(n), step.d_n, step.r_n}).get_si());
      if (need > kMaxSearchDepth) break;
      if (need <= n) {
        cand = Candidate{n, {c, static_cast<int>(step.d_n.get_si()), static_cast<int>(step.r_n.get_si())}};
      } else {
        n = need;
      }
    }
    if (cand) consider(evaluate(*cand), "diagonal");
  }
}

void Searcher::horospherical_stage() {
  const int bits = prec_.bits;
  const Real log3 = log(Real(3L, bits)), log5 = log(Real(5L, bits));
  const Real pi = Real::pi(bits);
  constexpr int kAngles = 48;
  for (int c = 7; c <= 8; ++c) {
    if (done() || out_of_budget()) return;
    const long m = 7L << (c - 4);
    const std::vector<long> residues = s_set(c - 4).elements;
    const BigInt s1 = mult_order(3, m), s2 = mult_order(5, m);
    const Real a = Real(s2, bits) * log5, b = Real(s1, bits) * log3;

    int n = search_.base_depth;
    std::optional<Candidate> cand;
    for (int round = 0; round < 4 && !cand; ++round) {
      const PlaneMap bg = unit_map_times_g(embedding(n, depth_precision(n, prec_).bits), bits);
      // Lattices (w, w tau) for w on the unit circle all have shape tau;
      // pulled back through B g they sweep a curve of Lambda-shapes.
      struct Plan {
        Real predicted;
        BigInt d, r;
      };
      std::optional<Plan> plan;
      for (int k = 0; k < kAngles; ++k) {
        const Real theta = pi * static_cast<long>(k) / Real(static_cast<long>(kAngles), bits);
        Real sn(bits), cs(bits);
        mpfr_sin_cos(sn.get(), cs.get(), theta.get(), MPFR_RNDN);
        const Complex w(cs, sn);
        const ShapePoint sigma = reduce_shape({bg.solve(w), bg.solve(w * tau_)}, prec_);
        const Real x = sigma.tau.re - floor_to_bigint(sigma.tau.re);
        const Real& y = sigma.tau.im;

        // Nearest f / m to x on the circle R/Z.
        long f = residues.front();
        Real fd = Real(2L, bits);
        for (long e : residues) {
          Real dist = abs(x - Real(e, bits) / Real(m, bits));
          dist = min(dist, Real(1L, bits) - dist);
          if (dist < fd) {
            fd = std::move(dist);
            f = e;
          }
        }
        BigInt r_f = 1;
        for (long v = 5 % m; v != f; v = v * 5 % m) ++r_f;

        // 5^(r_f + s2 q) / (m 3^(s1 p)) ~ y.
        const Real t = log(y * m) - Real(r_f, bits) * log5;
        const auto hit = first_linear_hit(a, b, t, eps_ / Real(8L, bits), BigInt(100000));
        if (!hit) continue;
        const Real h = y * exp(hit->error);
        const PlaneBasis model{bg.apply(Real(1L, bits), Real(0L, bits)),
                               bg.apply(Real(f, bits) / Real(m, bits), h)};
        Real predicted = distance_to_target(reduce_shape(model, prec_).tau);
        if (!plan || predicted < plan->predicted) {
          plan = Plan{std::move(predicted), s1 * hit->q + 2, r_f + s2 * hit->p + 1};
        }
      }
      if (!plan) break;
      const int need = static_cast<int>(std::max<BigInt>({BigInt(n), plan->d, plan->r}).get_si());
      if (need > kMaxSearchDepth) break;
      if (need <= n) {
        cand = Candidate{n, {c, static_cast<int>(plan->d.get_si()), static_cast<int>(plan->r.get_si())}};
      } else {
        n = need;
      }
    }
    if (cand) consider(evaluate(*cand), "horospherical");
  }
}

// A refinement stage that runs out of precision keeps what it found so far.
template <class F>
void refine(F&& stage) {
  try {
    stage();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PrecisionExhausted) throw;
  }
}

TargetHit Searcher::run() {
  const Real tol = shape_tolerance(prec_);
  require(tau_.im > 0L && abs(tau_.re) <= Real(0.5, prec_.bits) + tol &&
              tau_.norm() >= Real(1L, prec_.bits) - tol,
          ErrorKind::PreconditionViolated, "target must lie in the fundamental domain");
  require(eps_ > 0L, ErrorKind::PreconditionViolated, "eps must be positive");
  require(search_.base_depth >= 4, ErrorKind::InvalidParams, "base depth must be >= 4");

  CrtSpec spec;
  spec.n = search_.base_depth;
  ExponentBox box;
  box.c = box.d = box.r = {1, search_.base_depth};
  std::vector<SuborderShape> cloud = suborder_cloud(spec, box, prec_, search_.jobs);
  evaluations_ += static_cast<long>(cloud.size());

  std::vector<std::pair<Real, std::size_t>> ranked;
  ranked.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    ranked.emplace_back(distance_to_target(cloud[i].shape.tau), i);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  consider(cloud[ranked.front().second], "cloud");

  if (!done()) {
    std::vector<SuborderShape> seeds;
    for (const auto& [dist, i] : ranked) {
      const auto [c, d, r] = cloud[i].cdr;
      if (c >= 4 && d >= 2 && r >= 2) seeds.push_back(cloud[i]);
      if (seeds.size() == 6) break;
    }
    refine([&] { diagonal_stage(seeds); });
  }
  if (!done()) refine([&] { horospherical_stage(); });

  best_->evaluations = evaluations_;
  if (!done()) {
    throw TargetNotReached(*best_, "best distance " + best_->distance.to_string(6) +
                                       " exceeds eps after " + std::to_string(evaluations_) +
                                       " evaluations");
  }
  return *best_;
}

}  // namespace

Precision sublattice_precision(const BigInt& index, Precision prec) {
  const auto index_bits = static_cast<int>(mpz_sizeinbase(index.get_mpz_t(), 2));
  const int bits = prec.bits + 2 * index_bits + 32;
  return Precision((bits + 63) / 64 * 64);
}

std::size_t ExponentBox::size() const {
  auto len = [](const std::array<int, 2>& range) {
    return range[1] >= range[0] ? static_cast<std::size_t>(range[1] - range[0] + 1) : 0;
  };
  return len(c) * len(d) * len(r);
}

std::array<int, 3> ExponentBox::at(std::size_t i) const {
  const auto nd = static_cast<std::size_t>(d[1] - d[0] + 1);
  const auto nr = static_cast<std::size_t>(r[1] - r[0] + 1);
  return {c[0] + static_cast<int>(i / (nd * nr)), d[0] + static_cast<int>(i / nr % nd),
          r[0] + static_cast<int>(i % nr)};
}

std::vector<SuborderShape> suborder_cloud(const CrtSpec& spec, const ExponentBox& box,
                                          Precision prec, int jobs) {
  for (const auto* range : {&box.c, &box.d, &box.r}) {
    require((*range)[0] >= 0 && (*range)[0] <= (*range)[1], ErrorKind::InvalidParams,
            "exponent ranges must satisfy 0 <= lo <= hi");
    require((*range)[1] <= spec.n, ErrorKind::InvalidParams,
            "exponents above the CRT depth " + std::to_string(spec.n) +
                " break the suborder congruences");
  }
  const OrderParams params = crt_params(spec, prec);
  const LocalDataTriple data = local_data_for(params);
  // Indices grow with every exponent, so the far corner needs the most bits.
  const IntLattice2 corner = unit_exponent_lattice({box.c[1], box.d[1], box.r[1]}, data);
  const Precision p = sublattice_precision(corner.index(), prec);
  const OrderEmbedding emb = embed_order(params, p);
  require(emb.certified(), ErrorKind::NotCertified, "CRT order failed its certificate");

  return parallel_map(box.size(), jobs, [&](std::size_t i) {
    const std::array<int, 3> cdr = box.at(i);
    const IntLattice2 l = unit_exponent_lattice(cdr, data);
    return SuborderShape{spec.n, params, cdr, shape_of_lattice(emb, l, p)};
  });
}

TargetHit approx_target(const Complex& tau, const Real& eps, const TargetSearch& search,
                        Precision prec) {
  return Searcher(tau, eps, search, prec).run();
}

}  // namespace unitshapes
