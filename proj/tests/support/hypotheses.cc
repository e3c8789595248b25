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


#include "hypotheses.h"

#include <algorithm>
#include <numeric>

#include "fixtures.h"
#include "oracle.h"
#include "xacmlcov/reqgen.h"
#include "xacmlcov/tracegen.h"
#include "xacmlcov/xacml_io.h"

namespace xacmlcov::testing {
namespace {

Matrix score(const PolicySet& ps, const Hypothesis& h, Strategy s) {
  std::vector<ExecutedPair> pairs;
  for (const auto& req : generate_suite(ps, s))
    pairs.emplace_back(req, oracle_evaluate_policy(ps.policies.front(), h.algorithm,
                                                   h.order, req));
  auto traces = generate_all(ps);
  auto covered = oracle_coverage(traces, pairs);
  Matrix m{};
  for (std::size_t i = 0; i < traces.size(); ++i) {
    std::size_t total = traces[i].traces.size();
    std::size_t hit = covered[traces[i].criterion].size();
    m[i] = total == 0 ? 10000 : static_cast<std::int64_t>((20000 * hit + total) / (2 * total));
  }
  return m;
}

}  // namespace

bool Hypothesis::textual_order() const {
  return std::is_sorted(order.begin(), order.end());
}

std::string Hypothesis::describe() const {
  std::string out(to_string(algorithm));
  out += " [";
  for (std::size_t i = 0; i < order.size(); ++i)
    out += (i ? "," : "") + std::to_string(order[i]);
  return out + "]";
}

std::vector<Hypothesis> combining_hypotheses(const Policy& policy) {
  std::vector<Hypothesis> out;
  std::size_t n = policy.rules.size();
  for (auto a : {CombiningAlgorithm::kFirstApplicable,
                 CombiningAlgorithm::kPermitOverrides,
                 CombiningAlgorithm::kDenyOverrides}) {
    std::vector<std::size_t> head(n - 1);
    std::iota(head.begin(), head.end(), 0);
    do {
      Hypothesis h{a, head};
      h.order.push_back(n - 1);
      out.push_back(std::move(h));
    } while (std::next_permutation(head.begin(), head.end()));
  }
  return out;
}

bool consistent_with_reference(const PolicySet& ps, const Hypothesis& h) {
  const Policy& p = ps.policies.front();
  RequestTuple lone = load_request(fixture_path("julius_write_books.xml"));
  if (oracle_evaluate_policy(p, h.algorithm, h.order, lone) != Decision::kDeny)
    return false;
  // The two-subject request must exercise the conditioned rule.
  RequestTuple both = load_request(fixture_path("julius_professor_write_books.xml"));
  ExecutedPair pair{both, oracle_evaluate_policy(p, h.algorithm, h.order, both)};
  std::vector<TraceSet> rct = {gen_rct(ps)};
  auto covered = oracle_coverage(rct, {pair});
  const std::string& conditioned_id = rct.front().traces.at(2).id;
  if (!covered[Criterion::kRuleConditionTrue].count(conditioned_id)) return false;
  return score(ps, h, Strategy::kSimple) == kReferenceSimple &&
         score(ps, h, Strategy::kMultiple) == kReferenceMultiple;
}

}  // namespace xacmlcov::testing
