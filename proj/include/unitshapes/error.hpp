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

#ifndef UNITSHAPES_ERROR_HPP_
#define UNITSHAPES_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace unitshapes {

enum class ErrorKind {
  InvalidParams,
  PreconditionViolated,
  PrecisionExhausted,
  DegenerateBase,
  SingularBasis,
  RankDeficient,
  NotInPlane,
  DegenerateBasis,
  NotCertified,
  NotInUpperHalfPlane,
  CertificateFailed,
  NotCoprime,
  BudgetExhausted,
  NotInS,
  EmptyCloud,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind distinguishes them so callers (the CLI in particular) can map them to
// exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace unitshapes

#endif  // UNITSHAPES_ERROR_HPP_
