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

#include <arm_neon.h>

#include <limits>

#include "unitshapes/cloud_kernels.hpp"

namespace unitshapes::kernels {

// Two lanes; same tie-breaking as the AVX2 kernel.
Nearest nearest_neon(const CloudView& cloud, double re, double im) {
  const float64x2_t zr = vdupq_n_f64(re);
  const float64x2_t zi = vdupq_n_f64(im);
  float64x2_t best = vdupq_n_f64(std::numeric_limits<double>::infinity());
  uint64x2_t best_idx = vdupq_n_u64(0);
  uint64x2_t idx = {0, 1};
  const uint64x2_t two = vdupq_n_u64(2);

  std::size_t i = 0;
  for (; i + 2 <= cloud.size; i += 2) {
    const float64x2_t wr = vld1q_f64(cloud.re + i);
    const float64x2_t wi = vld1q_f64(cloud.im + i);
    const float64x2_t dx = vsubq_f64(zr, wr);
    const float64x2_t dy = vsubq_f64(zi, wi);
    const float64x2_t num = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    const float64x2_t key = vdivq_f64(num, wi);
    const uint64x2_t lt = vcltq_f64(key, best);
    best = vbslq_f64(lt, key, best);
    best_idx = vbslq_u64(lt, idx, best_idx);
    idx = vaddq_u64(idx, two);
  }

  Nearest out{0, std::numeric_limits<double>::infinity()};
  const double keys[2] = {vgetq_lane_f64(best, 0), vgetq_lane_f64(best, 1)};
  const std::size_t idxs[2] = {vgetq_lane_u64(best_idx, 0), vgetq_lane_u64(best_idx, 1)};
  for (int lane = 0; lane < 2; ++lane) {
    if (keys[lane] < out.key || (keys[lane] == out.key && idxs[lane] < out.index))
      out = {idxs[lane], keys[lane]};
  }
  for (; i < cloud.size; ++i) {
    const double dx = re - cloud.re[i];
    const double dy = im - cloud.im[i];
    const double key = (dx * dx + dy * dy) / cloud.im[i];
    if (key < out.key) out = {i, key};
  }
  return out;
}

}  // namespace unitshapes::kernels
