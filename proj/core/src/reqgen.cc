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

#include "xacmlcov/reqgen.h"

#include <cstdio>
#include <system_error>

#include <nlohmann/json.hpp>

#include "xacmlcov/errors.h"
#include "xacmlcov/xacml_io.h"

namespace xacmlcov {

std::string_view to_string(Strategy s) {
  return s == Strategy::kSimple ? "simple" : "multiple";
}

std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "simple") return Strategy::kSimple;
  if (s == "multiple") return Strategy::kMultiple;
  return std::nullopt;
}

namespace {

void collect(const Condition& c, std::array<ValueSet, 4>& into) {
  if (c.kind() == Condition::Kind::kPredicate) {
    into[index_of(c.value().category())].insert(c.value());
    return;
  }
  for (const auto& op : c.operands()) collect(op, into);
}

void collect(const TargetTuple& t, std::array<ValueSet, 4>& into) {
  for (Category c : kAllCategories)
    into[index_of(c)].insert(t[c].begin(), t[c].end());
}

// Mixed-radix counter over the four dimensions, subject most significant.
// `choose(dim, digit, req)` adds the digit-th option of `dim` to req.
template <typename Choose>
std::vector<RequestTuple> product(const std::array<std::uint64_t, 4>& radix,
                                  Choose choose) {
  std::uint64_t total = 1;
  for (auto r : radix) total *= r;
  std::vector<RequestTuple> out;
  out.reserve(static_cast<std::size_t>(total));
  std::array<std::uint64_t, 4> digit{};
  for (std::uint64_t n = 0; n < total; ++n) {
    RequestTuple req;
    for (std::size_t d = 0; d < 4; ++d) choose(d, digit[d], req);
    out.push_back(std::move(req));
    for (std::size_t d = 4; d-- > 0;) {
      if (++digit[d] < radix[d]) break;
      digit[d] = 0;
    }
  }
  return out;
}

}  // namespace

PolicyValues harvest(const PolicySet& ps) {
  std::array<ValueSet, 4> sets;
  collect(ps.target, sets);
  for (const auto& p : ps.policies) {
    collect(p.target, sets);
    for (const auto& r : p.rules) {
      collect(r.target, sets);
      if (r.condition) collect(*r.condition, sets);
    }
  }
  PolicyValues out;
  for (std::size_t i = 0; i < 4; ++i)
    out.sets[i].assign(sets[i].begin(), sets[i].end());
  return out;
}

std::vector<RequestTuple> gen_simple(const PolicySet& ps) {
  PolicyValues values = harvest(ps);
  std::array<std::uint64_t, 4> radix{};
  bool any = false;
  for (std::size_t d = 0; d < 4; ++d) {
    // An empty dimension contributes a single "absent" choice.
    radix[d] = values.sets[d].empty() ? 1 : values.sets[d].size();
    any = any || !values.sets[d].empty();
  }
  if (!any)
    throw EmptyPolicyValues("policy '" + ps.id + "' mentions no attribute values");
  return product(radix, [&](std::size_t d, std::uint64_t digit, RequestTuple& req) {
    if (!values.sets[d].empty()) req.insert(values.sets[d][digit]);
  });
}

std::vector<RequestTuple> gen_multiple(const PolicySet& ps,
                                       const GenerationOptions& options) {
  PolicyValues values = harvest(ps);
  std::size_t bits = 0;
  for (const auto& s : values.sets) bits += s.size();
  if (bits >= 63 || (std::uint64_t{1} << bits) > options.max_requests)
    throw SuiteTooLarge("multiple combinatorial suite of 2^" +
                            std::to_string(bits) + " requests exceeds cap of " +
                            std::to_string(options.max_requests),
                        options.max_requests);
  std::array<std::uint64_t, 4> radix{};
  for (std::size_t d = 0; d < 4; ++d)
    radix[d] = std::uint64_t{1} << values.sets[d].size();
  return product(radix, [&](std::size_t d, std::uint64_t mask, RequestTuple& req) {
    for (std::size_t i = 0; i < values.sets[d].size(); ++i)
      if ((mask >> i) & 1U) req.insert(values.sets[d][i]);
  });
}

std::vector<RequestTuple> generate_suite(const PolicySet& ps, Strategy s,
                                         const GenerationOptions& options) {
  return s == Strategy::kSimple ? gen_simple(ps) : gen_multiple(ps, options);
}

std::string request_id(Strategy s, std::size_t index) {
  char digits[32];
  std::snprintf(digits, sizeof digits, "%04zu", index);
  return "req_" + std::string(to_string(s)) + "_" + digits;
}

std::vector<SuiteEntry> write_suite(const std::filesystem::path& dir,
                                    std::string_view policy_id, Strategy s,
                                    const std::vector<RequestTuple>& suite) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<SuiteEntry> entries;
  nlohmann::json manifest = {{"policy_id", policy_id},
                             {"strategy", to_string(s)},
                             {"count", suite.size()},
                             {"requests", nlohmann::json::array()}};
  for (std::size_t i = 0; i < suite.size(); ++i) {
    SuiteEntry e{request_id(s, i + 1), ""};
    e.file = e.id + ".xml";
    write_text_file(dir / e.file, emit_request(suite[i]));
    manifest["requests"].push_back({{"id", e.id}, {"file", e.file}});
    entries.push_back(std::move(e));
  }
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return entries;
}

}  // namespace xacmlcov
