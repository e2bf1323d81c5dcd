// Copyright 2026 The patternq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace patternq {

/// Largest rank the verification suite accepts by default.
inline constexpr unsigned kMaxVerifyRank = 4;

struct CheckResult {
  std::string name;
  unsigned rank = 0;  ///< 0 for rank-independent checks
  std::uint64_t passed = 0;
  std::uint64_t total = 0;

  bool ok() const noexcept { return passed == total; }
};

/// Runs every structural and simulation check for ranks 1..rank_max.
std::vector<CheckResult> run_verification(unsigned rank_max, unsigned limit = kMaxVerifyRank);

}  // namespace patternq
