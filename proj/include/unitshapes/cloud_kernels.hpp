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

// Double-precision nearest-neighbour search in the upper half plane, for
// coverage probes and cloud lookups. The scalar kernel is the reference; the
// vector kernels evaluate the same expression lane by lane without
// contraction, so all variants return bit-identical results.

#ifndef UNITSHAPES_CLOUD_KERNELS_HPP_
#define UNITSHAPES_CLOUD_KERNELS_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace unitshapes {

// Structure-of-arrays point cloud; all im > 0.
struct CloudView {
  const double* re = nullptr;
  const double* im = nullptr;
  std::size_t size = 0;
};

// For a probe z: argmin over i of key_i = |z - w_i|^2 / Im w_i (lowest index
// on ties). acosh(1 + key / (2 Im z)) is then the hyperbolic distance.
struct Nearest {
  std::size_t index = 0;
  double key = 0.0;
};

enum class KernelIsa { Scalar, Avx2, Neon };

std::string_view to_string(KernelIsa isa);

// Variants compiled in and supported by this CPU, Scalar first.
std::vector<KernelIsa> available_isas();
// Best available variant.
KernelIsa active_isa();

// Throws EmptyCloud for an empty cloud and PreconditionViolated when asked
// for an unavailable variant.
Nearest nearest(const CloudView& cloud, double re, double im);
Nearest nearest_with(KernelIsa isa, const CloudView& cloud, double re, double im);

double key_to_distance(double key, double probe_im);

namespace kernels {
Nearest nearest_scalar(const CloudView& cloud, double re, double im);
Nearest nearest_avx2(const CloudView& cloud, double re, double im);
Nearest nearest_neon(const CloudView& cloud, double re, double im);
}  // namespace kernels

}  // namespace unitshapes

#endif  // UNITSHAPES_CLOUD_KERNELS_HPP_
