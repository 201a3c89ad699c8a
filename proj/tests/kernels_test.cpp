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
#include <random>
#include <vector>

#include "doctest.h"
#include "unitshapes/cloud_kernels.hpp"
#include "unitshapes/error.hpp"

using namespace unitshapes;

namespace {

struct Cloud {
  std::vector<double> re, im;
  CloudView view() const { return {re.data(), im.data(), re.size()}; }
};

Cloud random_cloud(std::mt19937_64& rng, std::size_t n, bool with_ties) {
  std::uniform_real_distribution<double> x(-0.5, 0.5), y(0.9, 6.0);
  Cloud c;
  for (std::size_t i = 0; i < n; ++i) {
    if (with_ties && i > 0 && rng() % 4 == 0) {
      // Exact duplicate of an earlier point: equal keys at two indices.
      const std::size_t j = rng() % i;
      c.re.push_back(c.re[j]);
      c.im.push_back(c.im[j]);
    } else {
      c.re.push_back(x(rng));
      c.im.push_back(y(rng));
    }
  }
  return c;
}

double brute_distance(const Cloud& c, double re, double im) {
  double best = INFINITY;
  for (std::size_t i = 0; i < c.re.size(); ++i) {
    const double dx = re - c.re[i], dy = im - c.im[i];
    best = std::min(best, std::acosh(1 + (dx * dx + dy * dy) / (2 * im * c.im[i])));
  }
  return best;
}

}  // namespace

TEST_CASE("scalar kernel against a direct distance scan") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-0.5, 0.5), y(1.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Cloud c = random_cloud(rng, 1 + rng() % 300, false);
    const double re = x(rng), im = y(rng);
    const Nearest n = kernels::nearest_scalar(c.view(), re, im);
    CHECK(key_to_distance(n.key, im) == doctest::Approx(brute_distance(c, re, im)).epsilon(1e-9));
  }
}

TEST_CASE("ties resolve to the lowest index") {
  const Cloud c{{0.1, 0.3, 0.1, 0.1, 0.3}, {1.5, 2.0, 1.5, 1.5, 2.0}};
  for (KernelIsa isa : available_isas()) {
    CAPTURE(to_string(isa));
    CHECK(nearest_with(isa, c.view(), 0.1, 1.5).index == 0);
    CHECK(nearest_with(isa, c.view(), 0.3, 2.0).index == 1);
  }
}

TEST_CASE("all kernels agree bit for bit") {
  const std::vector<KernelIsa> isas = available_isas();
  REQUIRE(isas.front() == KernelIsa::Scalar);
  MESSAGE("kernels: " << isas.size() << ", active " << to_string(active_isa()));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> x(-0.6, 0.6), y(0.8, 4.0);
  for (int trial = 0; trial < 400; ++trial) {
    // Sizes around the vector widths exercise the scalar tails.
    const std::size_t n = trial < 40 ? static_cast<std::size_t>(trial + 1) : 1 + rng() % 2000;
    const Cloud c = random_cloud(rng, n, trial % 2 == 0);
    for (int probe = 0; probe < 5; ++probe) {
      double re = x(rng), im = y(rng);
      if (probe == 0) {
        const std::size_t j = rng() % n;
        re = c.re[j];
        im = c.im[j];
      }
      const Nearest want = kernels::nearest_scalar(c.view(), re, im);
      for (KernelIsa isa : isas) {
        CAPTURE(to_string(isa));
        CAPTURE(n);
        const Nearest got = nearest_with(isa, c.view(), re, im);
        CHECK(got.index == want.index);
        CHECK(got.key == want.key);
      }
      const Nearest dispatched = nearest(c.view(), re, im);
      CHECK(dispatched.index == want.index);
    }
  }
}

TEST_CASE("kernel preconditions") {
  const Cloud empty;
  try {
    nearest(empty.view(), 0.0, 1.0);
    FAIL("expected EmptyCloud");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyCloud);
  }
  const Cloud one{{0.0}, {1.0}};
  CHECK(nearest(one.view(), 0.0, 1.0).key == 0.0);
  CHECK(key_to_distance(0.0, 1.0) == 0.0);
  // |2i - i|^2 / 1 = 1 -> acosh(1 + 1/4) = log 2.
  CHECK(key_to_distance(1.0, 2.0) == doctest::Approx(std::log(2.0)));
  for (KernelIsa isa : {KernelIsa::Avx2, KernelIsa::Neon}) {
    bool have = false;
    for (KernelIsa a : available_isas()) have = have || a == isa;
    if (!have) CHECK_THROWS_AS(nearest_with(isa, one.view(), 0.0, 1.0), Error);
  }
}
