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

#include <algorithm>
#include <cmath>
#include <string>

#include "unitshapes/cloud_kernels.hpp"
#include "unitshapes/error.hpp"

namespace unitshapes {

std::string_view to_string(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar: return "scalar";
    case KernelIsa::Avx2: return "avx2";
    case KernelIsa::Neon: return "neon";
  }
  return "?";
}

std::vector<KernelIsa> available_isas() {
  std::vector<KernelIsa> out = {KernelIsa::Scalar};
#if defined(UNITSHAPES_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) out.push_back(KernelIsa::Avx2);
#endif
#if defined(UNITSHAPES_HAVE_NEON)
  out.push_back(KernelIsa::Neon);
#endif
  return out;
}

KernelIsa active_isa() {
  static const KernelIsa isa = available_isas().back();
  return isa;
}

Nearest nearest_with(KernelIsa isa, const CloudView& cloud, double re, double im) {
  require(cloud.size > 0, ErrorKind::EmptyCloud, "nearest-neighbour query on an empty cloud");
  const auto isas = available_isas();
  require(std::find(isas.begin(), isas.end(), isa) != isas.end(),
          ErrorKind::PreconditionViolated,
          std::string("kernel variant not available: ") + std::string(to_string(isa)));
  switch (isa) {
#if defined(UNITSHAPES_HAVE_AVX2)
    case KernelIsa::Avx2: return kernels::nearest_avx2(cloud, re, im);
#endif
#if defined(UNITSHAPES_HAVE_NEON)
    case KernelIsa::Neon: return kernels::nearest_neon(cloud, re, im);
#endif
    default: return kernels::nearest_scalar(cloud, re, im);
  }
}

Nearest nearest(const CloudView& cloud, double re, double im) {
  return nearest_with(active_isa(), cloud, re, im);
}

double key_to_distance(double key, double probe_im) {
  // acosh(1 + x) = log1p(x + sqrt(x (x + 2))), accurate for small x.
  const double x = key / (2.0 * probe_im);
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

}  // namespace unitshapes
