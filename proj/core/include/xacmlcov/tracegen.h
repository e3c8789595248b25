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

// Trace derivation for the four rule-level coverage criteria.
//
// A trace is a chain of per-level constraint tuples (policy set, policy,
// rule) plus the effect a covering response has to carry. Each dimension
// constraint is a conjunction of literals:
//
//   RequireOneOf{v...}  the request carries at least one of the values
//   ForbidAllOf{v...}   the request carries none of the values
//
// An empty literal list means "any".
//
//   Rule Target True    every enclosing target and the rule target match.
//   Rule Target False   enclosing targets match; for each non-empty subset of
//                       the negatable rule-target dimensions, those dimensions
//                       miss the rule target while the others hit it.
//   Rule Condition True target-true chain plus the condition's CNF clauses.
//   Rule Condition False target-true chain plus one disjunct of the DNF of
//                       the negated condition (rules with conditions only).
//
// Every emitted trace is satisfiable; see `witness`.

#ifndef XACMLCOV_TRACEGEN_H_
#define XACMLCOV_TRACEGEN_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xacmlcov/model.h"

namespace xacmlcov {

enum class Criterion : std::uint8_t {
  kRuleTargetTrue,
  kRuleTargetFalse,
  kRuleConditionTrue,
  kRuleConditionFalse
};

inline constexpr std::array<Criterion, 4> kAllCriteria = {
    Criterion::kRuleTargetTrue, Criterion::kRuleTargetFalse,
    Criterion::kRuleConditionTrue, Criterion::kRuleConditionFalse};

// "RuleTargetTrue", ...
std::string_view to_string(Criterion c);
// "rtt", "rtf", "rct", "rcf"
std::string_view short_name(Criterion c);
// "Rule Target True", ...
std::string_view display_name(Criterion c);
// Accepts either the long or the short form.
std::optional<Criterion> criterion_from_string(std::string_view s);

enum class Level : std::uint8_t { kPolicySet, kPolicy, kRule };
std::string_view to_string(Level l);

struct Literal {
  enum class Kind : std::uint8_t { kRequireOneOf, kForbidAllOf };

  Kind kind = Kind::kRequireOneOf;
  ValueSet values;

  static Literal require(ValueSet values) {
    return {Kind::kRequireOneOf, std::move(values)};
  }
  static Literal forbid(ValueSet values) {
    return {Kind::kForbidAllOf, std::move(values)};
  }

  bool satisfied_by(const ValueSet& request_values) const;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct DimensionConstraint {
  std::vector<Literal> literals;

  bool is_any() const { return literals.empty(); }
  bool satisfied_by(const ValueSet& request_values) const;

  friend bool operator==(const DimensionConstraint&,
                         const DimensionConstraint&) = default;
};

struct LevelConstraint {
  Level level = Level::kRule;
  std::array<DimensionConstraint, 4> dims;

  const DimensionConstraint& operator[](Category c) const {
    return dims[index_of(c)];
  }
  DimensionConstraint& operator[](Category c) { return dims[index_of(c)]; }

  friend bool operator==(const LevelConstraint&, const LevelConstraint&) = default;
};

struct Trace {
  std::string id;
  Criterion criterion = Criterion::kRuleTargetTrue;
  std::string rule_id;
  std::vector<LevelConstraint> chain;
  // Absent: any decision covers the trace.
  std::optional<Effect> effect;

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct TraceSet {
  Criterion criterion = Criterion::kRuleTargetTrue;
  std::string policy_id;
  std::vector<Trace> traces;

  friend bool operator==(const TraceSet&, const TraceSet&) = default;
};

struct RulePath {
  std::string policy_id;
  std::string rule_id;
};

struct TargetEntry {
  Level level;
  TargetTuple tuple;

  friend bool operator==(const TargetEntry&, const TargetEntry&) = default;
};

// Ordered by enclosure, outermost first.
using RuleTargetSet = std::vector<TargetEntry>;

// Throws UnknownRule.
RuleTargetSet rule_target_set(const PolicySet& ps, const RulePath& path);

TraceSet gen_rtt(const PolicySet& ps);
TraceSet gen_rtf(const PolicySet& ps);
// Throw UnsupportedCondition when a condition has no trace encoding.
TraceSet gen_rct(const PolicySet& ps);
TraceSet gen_rcf(const PolicySet& ps);

TraceSet generate(const PolicySet& ps, Criterion c);
// All four criteria in kAllCriteria order.
std::vector<TraceSet> generate_all(const PolicySet& ps);

// A request satisfying every literal of the chain, or nullopt if none
// exists. Forbid-only dimensions are left empty.
std::optional<RequestTuple> witness(const Trace& trace);

// Tabular notation, e.g.
//   T2_1 = {(∅, ∅, ∅, ∅), (∅, {books}, ∅, ∅), ({≠Julius}, {books}, {≠write}, ∅), -}
// Values print without attribute ids.
std::string render(const Trace& trace);

}  // namespace xacmlcov

#endif  // XACMLCOV_TRACEGEN_H_
