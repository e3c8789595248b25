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

// JSON encodings of the toolkit's exchange formats.
//
// Attribute value:
//   {"category":"subject","attribute_id":"...","data_type":"...","value":"..."}
// Request tuple:
//   {"subjects":[av...],"resources":[...],"actions":[...],"environments":[...]}
// Trace set:
//   {"criterion":"RuleTargetFalse","policy_id":"...",
//    "traces":[{"id":"T2_1","rule_id":"ruleB",
//               "chain":[[dim,dim,dim,dim], ...],   // outermost level first
//               "effect":"Deny"|null}]}
//   where each dim is a list of {"require":[av...]} / {"forbid":[av...]}.
// Event line (one JSON object per line):
//   {"type":"request","id":"r1","tuple":{...}}
//   {"type":"response","id":"r1","decision":"Permit"}
//   {"type":"flush"}
// Coverage report:
//   {"RuleTargetTrue":{"total":4,"covered":4,"percentage":100.0,
//                      "uncovered":[]}, ...,
//    "meta":{"requests":6,"responses":6,"skipped_events":0}}
//
// Decoders throw FormatError with a description of the offending field.

#ifndef XACMLCOV_JSON_CODEC_H_
#define XACMLCOV_JSON_CODEC_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "xacmlcov/model.h"
#include "xacmlcov/monitor.h"
#include "xacmlcov/tracegen.h"

namespace xacmlcov {

using Json = nlohmann::json;

Json to_json(const AttributeValue& v);
// `expected` fills in a missing category and rejects a different one.
AttributeValue attribute_value_from_json(const Json& j,
                                         std::optional<Category> expected = {});

Json to_json(const RequestTuple& req);
RequestTuple request_tuple_from_json(const Json& j);

Json to_json(const TraceSet& ts);
TraceSet trace_set_from_json(const Json& j);
// Accepts a single trace-set object or an array of them.
std::vector<TraceSet> trace_sets_from_json(const Json& j);
Json to_json(const std::vector<TraceSet>& sets);

Json to_json(const Event& e);
Event event_from_json(const Json& j);
// One line without the trailing newline.
std::string to_event_line(const Event& e);
Event parse_event_line(std::string_view line);

Json to_json(const CoverageReport& r);
CoverageReport report_from_json(const Json& j);

// Throws FormatError.
Json parse_json(std::string_view text);

}  // namespace xacmlcov

#endif  // XACMLCOV_JSON_CODEC_H_
