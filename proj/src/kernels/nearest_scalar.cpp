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

#include <limits>

#include "unitshapes/cloud_kernels.hpp"

namespace unitshapes::kernels {

Nearest nearest_scalar(const CloudView& cloud, double re, double im) {
  Nearest best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < cloud.size; ++i) {
    const double dx = re - cloud.re[i];
    const double dy = im - cloud.im[i];
    const double key = (dx * dx + dy * dy) / cloud.im[i];
    if (key < best.key) best = {i, key};
  }
  return best;
}

}  // namespace unitshapes::kernels
