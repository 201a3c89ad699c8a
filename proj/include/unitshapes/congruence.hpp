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

#ifndef UNITSHAPES_CONGRUENCE_HPP_
#define UNITSHAPES_CONGRUENCE_HPP_

#include <vector>

#include "unitshapes/numeric.hpp"

namespace unitshapes {

// u*m + v*n == 0 (mod modulus), modulus >= 1.
struct CongruenceRow {
  BigInt u;
  BigInt v;
  BigInt modulus;
};

struct CongruenceSystem {
  std::vector<CongruenceRow> rows;

  bool holds(const BigInt& m, const BigInt& n) const;
};

}  // namespace unitshapes

#endif  // UNITSHAPES_CONGRUENCE_HPP_
