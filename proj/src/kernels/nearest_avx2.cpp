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

#include <immintrin.h>

#include <limits>

#include "unitshapes/cloud_kernels.hpp"

namespace unitshapes::kernels {

// Four lanes, each tracking its own minimum over indices i == lane (mod 4);
// strict < keeps the first index per lane, and the final merge breaks key
// ties by index, so the result matches the scalar loop exactly.
Nearest nearest_avx2(const CloudView& cloud, double re, double im) {
  const __m256d zr = _mm256_set1_pd(re);
  const __m256d zi = _mm256_set1_pd(im);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d best_idx = _mm256_setzero_pd();
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = _mm256_set1_pd(4.0);

  std::size_t i = 0;
  for (; i + 4 <= cloud.size; i += 4) {
    const __m256d wr = _mm256_loadu_pd(cloud.re + i);
    const __m256d wi = _mm256_loadu_pd(cloud.im + i);
    const __m256d dx = _mm256_sub_pd(zr, wr);
    const __m256d dy = _mm256_sub_pd(zi, wi);
    const __m256d num = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d key = _mm256_div_pd(num, wi);
    const __m256d lt = _mm256_cmp_pd(key, best, _CMP_LT_OQ);
    best = _mm256_blendv_pd(best, key, lt);
    best_idx = _mm256_blendv_pd(best_idx, idx, lt);
    idx = _mm256_add_pd(idx, four);
  }

  alignas(32) double keys[4];
  alignas(32) double idxs[4];
  _mm256_store_pd(keys, best);
  _mm256_store_pd(idxs, best_idx);
  Nearest out{0, std::numeric_limits<double>::infinity()};
  for (int lane = 0; lane < 4; ++lane) {
    const auto li = static_cast<std::size_t>(idxs[lane]);
    if (keys[lane] < out.key || (keys[lane] == out.key && li < out.index)) out = {li, keys[lane]};
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
