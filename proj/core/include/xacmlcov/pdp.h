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

// Policy decision point for the supported subset. Conditions are two-valued,
// so evaluation never yields Indeterminate.

#ifndef XACMLCOV_PDP_H_
#define XACMLCOV_PDP_H_

#include <span>

#include "xacmlcov/model.h"

namespace xacmlcov {

Decision evaluate_rule(const Rule& rule, const RequestTuple& req);
Decision evaluate_policy(const Policy& policy, const RequestTuple& req);
Decision evaluate(const PolicySet& ps, const RequestTuple& req);

// Reduces child decisions in order. Exposed for tests.
Decision combine(CombiningAlgorithm algorithm, std::span<const Decision> decisions);

}  // namespace xacmlcov

#endif  // XACMLCOV_PDP_H_
