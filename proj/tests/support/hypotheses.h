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


// Brute force over the unknowns of the library policy's combining behaviour:
// which rule-combining algorithm it uses and in what order the rules are
// visited. The catch-all rule stays last in every hypothesis.

#ifndef XACMLCOV_TESTS_SUPPORT_HYPOTHESES_H_
#define XACMLCOV_TESTS_SUPPORT_HYPOTHESES_H_

#include <array>
#include <string>
#include <vector>

#include "xacmlcov/model.h"

namespace xacmlcov::testing {

struct Hypothesis {
  CombiningAlgorithm algorithm;
  std::vector<std::size_t> order;

  bool textual_order() const;
  std::string describe() const;
};

std::vector<Hypothesis> combining_hypotheses(const Policy& policy);

// Coverage hundredths per criterion (kAllCriteria order).
using Matrix = std::array<std::int64_t, 4>;

inline constexpr Matrix kReferenceSimple = {10000, 10000, 7500, 10000};
inline constexpr Matrix kReferenceMultiple = {10000, 10000, 10000, 10000};

// Consistent when, with the oracle PDP playing the policy under `h`: the
// lone-subject write request is refused, the two-subject request covers the
// conditioned rule's condition-true trace, and both suites score the
// reference matrices under the oracle matcher.
bool consistent_with_reference(const PolicySet& ps, const Hypothesis& h);

}  // namespace xacmlcov::testing

#endif  // XACMLCOV_TESTS_SUPPORT_HYPOTHESES_H_
