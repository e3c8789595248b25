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

#include "xacmlcov/pdp.h"

#include <algorithm>
#include <vector>

namespace xacmlcov {
namespace {

bool any_is(std::span<const Decision> ds, Decision d) {
  return std::find(ds.begin(), ds.end(), d) != ds.end();
}

// `overriding` wins outright; otherwise the other definite effect, else
// Indeterminate if seen, else NotApplicable.
Decision overrides(std::span<const Decision> ds, Decision overriding,
                   Decision other) {
  if (any_is(ds, overriding)) return overriding;
  if (any_is(ds, Decision::kIndeterminate)) return Decision::kIndeterminate;
  if (any_is(ds, other)) return other;
  return Decision::kNotApplicable;
}

}  // namespace

Decision combine(CombiningAlgorithm algorithm,
                 std::span<const Decision> decisions) {
  switch (algorithm) {
    case CombiningAlgorithm::kFirstApplicable:
      for (Decision d : decisions)
        if (d != Decision::kNotApplicable) return d;
      return Decision::kNotApplicable;
    case CombiningAlgorithm::kPermitOverrides:
      return overrides(decisions, Decision::kPermit, Decision::kDeny);
    case CombiningAlgorithm::kDenyOverrides:
      return overrides(decisions, Decision::kDeny, Decision::kPermit);
  }
  return Decision::kIndeterminate;
}

Decision evaluate_rule(const Rule& rule, const RequestTuple& req) {
  if (!tuple_matches(rule.target, req)) return Decision::kNotApplicable;
  if (rule.condition && !eval_condition(*rule.condition, req))
    return Decision::kNotApplicable;
  return to_decision(rule.effect);
}

Decision evaluate_policy(const Policy& policy, const RequestTuple& req) {
  if (!tuple_matches(policy.target, req)) return Decision::kNotApplicable;
  std::vector<Decision> ds;
  ds.reserve(policy.rules.size());
  for (const auto& r : policy.rules) {
    ds.push_back(evaluate_rule(r, req));
    // First-applicable never looks past the first definite answer.
    if (policy.rule_combining == CombiningAlgorithm::kFirstApplicable &&
        ds.back() != Decision::kNotApplicable)
      break;
  }
  return combine(policy.rule_combining, ds);
}

Decision evaluate(const PolicySet& ps, const RequestTuple& req) {
  if (!tuple_matches(ps.target, req)) return Decision::kNotApplicable;
  std::vector<Decision> ds;
  ds.reserve(ps.policies.size());
  for (const auto& p : ps.policies) ds.push_back(evaluate_policy(p, req));
  return combine(ps.policy_combining, ds);
}

}  // namespace xacmlcov
