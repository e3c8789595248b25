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


#include "xacmlcov/json_codec.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "random_policy.h"
#include "xacmlcov/errors.h"
#include "xacmlcov/pdp.h"
#include "xacmlcov/reqgen.h"

namespace xacmlcov {
namespace {

using testing::fixture_policy;

TEST(JsonTest, AttributeValue) {
  AttributeValue v(Category::kAction, "urn:a", "write");
  Json j = to_json(v);
  EXPECT_EQ(j["category"], "action");
  EXPECT_EQ(attribute_value_from_json(j), v);
  Json no_category = {{"attribute_id", "urn:a"}, {"value", "write"}};
  EXPECT_EQ(attribute_value_from_json(no_category, Category::kAction), v);
  EXPECT_THROW(attribute_value_from_json(no_category), FormatError);
  EXPECT_THROW(attribute_value_from_json(j, Category::kSubject), FormatError);
  EXPECT_THROW(attribute_value_from_json({{"attribute_id", "a"}, {"value", ""}},
                                         Category::kAction),
               FormatError);
}

TEST(JsonTest, RandomRequestTuplesRoundTrip) {
  testing::RandomPolicyGenerator gen(41);
  for (int i = 0; i < 200; ++i) {
    RequestTuple req = gen.wild_request();
    EXPECT_EQ(request_tuple_from_json(parse_json(to_json(req).dump())), req);
  }
}

TEST(JsonTest, TraceSetsRoundTrip) {
  testing::RandomPolicyGenerator gen(43);
  for (int i = 0; i < 50; ++i) {
    auto sets = generate_all(gen.policy_set());
    EXPECT_EQ(trace_sets_from_json(parse_json(to_json(sets).dump())), sets);
  }
  auto one = gen_rcf(fixture_policy(1));
  EXPECT_EQ(trace_sets_from_json(to_json(one)), std::vector<TraceSet>{one});
}

TEST(JsonTest, TraceSetErrors) {
  Json j = to_json(gen_rtt(fixture_policy(1)));
  Json bad = j;
  bad["criterion"] = "Nope";
  EXPECT_THROW(trace_set_from_json(bad), FormatError);
  bad = j;
  bad["traces"][0]["chain"][0] = Json::array({Json::array()});
  EXPECT_THROW(trace_set_from_json(bad), FormatError);
  bad = j;
  bad["traces"][0]["effect"] = "Maybe";
  EXPECT_THROW(trace_set_from_json(bad), FormatError);
  bad = j;
  bad["traces"][0].erase("id");
  EXPECT_THROW(trace_set_from_json(bad), FormatError);
}

TEST(JsonTest, EventLines) {
  RequestTuple req{AttributeValue(Category::kSubject, "id", "Julius")};
  std::vector<Event> events = {RequestEvent{"r1", req},
                               ResponseEvent{"r1", Decision::kNotApplicable},
                               FlushEvent{}};
  for (const auto& e : events) {
    std::string line = to_event_line(e);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_EQ(parse_event_line(line).index(), e.index());
  }
  auto back = std::get<RequestEvent>(parse_event_line(to_event_line(events[0])));
  EXPECT_EQ(back.request_id, "r1");
  EXPECT_EQ(back.tuple, req);
  EXPECT_EQ(std::get<ResponseEvent>(parse_event_line(to_event_line(events[1]))).decision,
            Decision::kNotApplicable);
}

TEST(JsonTest, MalformedEventLines) {
  EXPECT_THROW(parse_event_line("{"), FormatError);
  EXPECT_THROW(parse_event_line("[]"), FormatError);
  EXPECT_THROW(parse_event_line(R"({"type":"ping"})"), FormatError);
  EXPECT_THROW(parse_event_line(R"({"type":"response","id":"r","decision":"permit"})"),
               FormatError);
  EXPECT_THROW(parse_event_line(R"({"type":"request","id":"r"})"), FormatError);
  EXPECT_THROW(parse_event_line(R"({"type":"request","id":7,"tuple":{}})"), FormatError);
}

TEST(JsonTest, ReportRoundTrip) {
  PolicySet ps = fixture_policy(1);
  CoverageMonitor m(generate_all(ps));
  std::size_t i = 0;
  for (const auto& req : gen_simple(ps)) {
    std::string id = std::to_string(i++);
    m.ingest(RequestEvent{id, req});
    m.ingest(ResponseEvent{id, evaluate(ps, req)});
  }
  CoverageReport r = m.report();
  Json j = to_json(r);
  EXPECT_EQ(j["RuleConditionTrue"]["percentage"], 75.0);
  EXPECT_EQ(j["RuleConditionTrue"]["uncovered"], Json::array({"T3"}));
  EXPECT_EQ(j["meta"]["requests"], 6);
  CoverageReport back = report_from_json(j);
  ASSERT_EQ(back.criteria.size(), 4u);
  for (std::size_t c = 0; c < 4; ++c) {
    EXPECT_EQ(back.criteria[c].criterion, r.criteria[c].criterion);
    EXPECT_EQ(back.criteria[c].covered, r.criteria[c].covered);
    EXPECT_EQ(back.criteria[c].hundredths, r.criteria[c].hundredths);
    EXPECT_EQ(back.criteria[c].uncovered, r.criteria[c].uncovered);
  }
  EXPECT_EQ(back.responses, 6u);
}

TEST(JsonTest, EmptyCriterionIsFlagged) {
  CoverageMonitor m({gen_rcf(testing::RandomPolicyGenerator(1).policy_set())});
  TraceSet empty;
  empty.criterion = Criterion::kRuleTargetFalse;
  CoverageMonitor e({empty});
  Json j = to_json(e.report());
  EXPECT_EQ(j["RuleTargetFalse"]["percentage"], 100.0);
  EXPECT_EQ(j["RuleTargetFalse"]["empty"], true);
}

}  // namespace
}  // namespace xacmlcov
