// Copyright 2026 The gamegraph Authors
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
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gg {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error("search budget exceeded: " + what) {}
};

/// Node budget shared by the exponential searches (fairly-mixing recursion,
/// equilibrium witness enumeration, product constructions). The default can
/// be overridden with the GG_BUDGET environment variable.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("GG_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

class Budget {
 public:
  explicit Budget(std::uint64_t limit = default_budget(), std::string what = "search")
      : limit_(limit), what_(std::move(what)) {}

  void spend(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded(what_ + " (limit " + std::to_string(limit_) + ")");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace gg
