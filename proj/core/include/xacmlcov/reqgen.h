// Copyright 2026 The xacmlcov Authors
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

// Combinatorial request generation from the values a policy mentions.
//
// Simple: one value per non-empty dimension, full Cartesian product.
// Multiple: one subset per dimension (power sets), full Cartesian product;
// the empty subset leaves the dimension absent.
//
// Both orders are deterministic: subject outermost, environment innermost;
// values sorted by (attribute id, value); subsets in binary counting order
// with the first sorted value as bit 0.

#ifndef XACMLCOV_REQGEN_H_
#define XACMLCOV_REQGEN_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xacmlcov/model.h"

namespace xacmlcov {

enum class Strategy : std::uint8_t { kSimple, kMultiple };

// "simple" / "multiple"
std::string_view to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view s);

// Per-category value lists in generation order.
struct PolicyValues {
  std::array<std::vector<AttributeValue>, 4> sets;

  const std::vector<AttributeValue>& operator[](Category c) const {
    return sets[index_of(c)];
  }
};

// Every value of every target, plus the values condition predicates test.
PolicyValues harvest(const PolicySet& ps);

inline constexpr std::uint64_t kDefaultSuiteCap = std::uint64_t{1} << 20;

struct GenerationOptions {
  std::uint64_t max_requests = kDefaultSuiteCap;
};

// Throws EmptyPolicyValues when the policy mentions no value at all.
std::vector<RequestTuple> gen_simple(const PolicySet& ps);
// Throws SuiteTooLarge when 2^(total value count) exceeds the cap.
std::vector<RequestTuple> gen_multiple(const PolicySet& ps,
                                       const GenerationOptions& options = {});
std::vector<RequestTuple> generate_suite(const PolicySet& ps, Strategy s,
                                         const GenerationOptions& options = {});

struct SuiteEntry {
  std::string id;    // req_<strategy>_<index>, index 1-based, 4+ digits
  std::string file;  // <id>.xml, relative to the suite directory
};

std::string request_id(Strategy s, std::size_t index);

// Writes one XACML request document per tuple plus manifest.json listing the
// ids in order. Creates `dir` if needed. Throws IoError.
std::vector<SuiteEntry> write_suite(const std::filesystem::path& dir,
                                    std::string_view policy_id, Strategy s,
                                    const std::vector<RequestTuple>& suite);

}  // namespace xacmlcov

#endif  // XACMLCOV_REQGEN_H_
