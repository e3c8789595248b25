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

#include <filesystem>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.h"
#include "random_policy.h"
#include "xacmlcov/errors.h"
#include "xacmlcov/xacml_io.h"

namespace xacmlcov {
namespace {

using testing::fixture_policy;

AttributeValue subject(const std::string& v) {
  return {Category::kSubject, std::string(attributes::kSubjectId), v};
}
AttributeValue role(const std::string& v) {
  return {Category::kSubject, std::string(attributes::kRole), v};
}
AttributeValue resource(const std::string& v) {
  return {Category::kResource, std::string(attributes::kResourceId), v};
}
AttributeValue action(const std::string& v) {
  return {Category::kAction, std::string(attributes::kActionId), v};
}

TEST(HarvestTest, TargetAndConditionValues) {
  PolicyValues v = harvest(fixture_policy(1));
  EXPECT_EQ(v[Category::kSubject],
            (std::vector<AttributeValue>{subject("Julius"), role("administrator"),
                                         role("professor")}));
  EXPECT_EQ(v[Category::kResource], std::vector<AttributeValue>{resource("books")});
  EXPECT_EQ(v[Category::kAction],
            (std::vector<AttributeValue>{action("read"), action("write")}));
  EXPECT_TRUE(v[Category::kEnvironment].empty());
  EXPECT_EQ(harvest(fixture_policy(2))[Category::kSubject].size(), 4u);
}

TEST(SimpleTest, SuiteSizes) {
  EXPECT_EQ(gen_simple(fixture_policy(1)).size(), 6u);
  EXPECT_EQ(gen_simple(fixture_policy(2)).size(), 8u);
}

TEST(SimpleTest, OneValuePerNonEmptyDimensionSubjectOutermost) {
  auto suite = gen_simple(fixture_policy(1));
  EXPECT_EQ(suite[0], (RequestTuple{subject("Julius"), resource("books"), action("read")}));
  EXPECT_EQ(suite[1], (RequestTuple{subject("Julius"), resource("books"), action("write")}));
  EXPECT_EQ(suite[2],
            (RequestTuple{role("administrator"), resource("books"), action("read")}));
  for (const auto& r : suite) {
    EXPECT_EQ(r.subjects().size(), 1u);
    EXPECT_EQ(r.resources().size(), 1u);
    EXPECT_EQ(r.actions().size(), 1u);
    EXPECT_TRUE(r.environments().empty());
  }
}

TEST(SimpleTest, SingleValuedRequestsCannotSatisfyTwoSubjectLiterals) {
  for (const auto& r : gen_simple(fixture_policy(1)))
    EXPECT_FALSE(r.subjects().count(subject("Julius")) &&
                 (r.subjects().count(role("professor")) ||
                  r.subjects().count(role("administrator"))));
}

TEST(MultipleTest, SuiteSizes) {
  EXPECT_EQ(gen_multiple(fixture_policy(1)).size(), 64u);
  EXPECT_EQ(gen_multiple(fixture_policy(2)).size(), 128u);
}

TEST(MultipleTest, EnumeratesEverySubsetOnce) {
  auto suite = gen_multiple(fixture_policy(1));
  std::set<std::vector<std::string>> seen;
  for (const auto& r : suite) {
    std::vector<std::string> key;
    for (Category c : kAllCategories)
      for (const auto& v : r[c]) key.push_back(v.attribute_id() + "=" + v.value());
    EXPECT_TRUE(seen.insert(key).second);
  }
  EXPECT_TRUE(suite.front().empty());
  EXPECT_EQ(suite.back().size(), 6u);
  // The first value is bit 0 of the innermost-varying dimension.
  EXPECT_EQ(suite[1], RequestTuple{action("read")});
}

TEST(MultipleTest, CapAndOptions) {
  PolicySet ps = fixture_policy(1);
  EXPECT_THROW(gen_multiple(ps, GenerationOptions{63}), SuiteTooLarge);
  EXPECT_EQ(gen_multiple(ps, GenerationOptions{64}).size(), 64u);
  try {
    gen_multiple(ps, GenerationOptions{10});
    FAIL();
  } catch (const SuiteTooLarge& e) {
    EXPECT_EQ(e.cap(), 10u);
  }
}

TEST(MultipleTest, DefaultCapRejectsHugePolicies) {
  PolicySet ps;
  ps.id = "big";
  Policy p;
  p.id = "p";
  Rule r{"r", {}, std::nullopt, Effect::kPermit};
  for (int i = 0; i < 21; ++i) r.target.insert(resource("res" + std::to_string(i)));
  p.rules.push_back(r);
  ps.policies.push_back(p);
  EXPECT_THROW(gen_multiple(ps), SuiteTooLarge);
  EXPECT_EQ(gen_simple(ps).size(), 21u);
}

TEST(SimpleTest, EmptyPolicyValues) {
  PolicySet ps;
  ps.id = "empty";
  Policy p;
  p.id = "p";
  p.rules.push_back(Rule{"r", {}, std::nullopt, Effect::kPermit});
  ps.policies.push_back(p);
  EXPECT_THROW(gen_simple(ps), EmptyPolicyValues);
}

TEST(StrategyTest, Names) {
  EXPECT_EQ(strategy_from_string("simple"), Strategy::kSimple);
  EXPECT_EQ(strategy_from_string("multiple"), Strategy::kMultiple);
  EXPECT_FALSE(strategy_from_string("simpel").has_value());
  EXPECT_EQ(request_id(Strategy::kSimple, 1), "req_simple_0001");
  EXPECT_EQ(request_id(Strategy::kMultiple, 12345), "req_multiple_12345");
}

TEST(GenerateTest, Deterministic) {
  testing::RandomPolicyGenerator gen(23);
  for (int i = 0; i < 50; ++i) {
    PolicySet ps = gen.policy_set();
    EXPECT_EQ(generate_suite(ps, Strategy::kSimple), generate_suite(ps, Strategy::kSimple));
    EXPECT_EQ(generate_suite(ps, Strategy::kMultiple),
              generate_suite(ps, Strategy::kMultiple));
  }
}

TEST(WriteSuiteTest, FilesAndManifest) {
  auto dir = std::filesystem::temp_directory_path() / "xacmlcov_reqgen_test";
  std::filesystem::remove_all(dir);
  PolicySet ps = fixture_policy(1);
  auto suite = gen_simple(ps);
  auto entries = write_suite(dir, ps.id, Strategy::kSimple, suite);
  ASSERT_EQ(entries.size(), 6u);
  for (std::size_t i = 0; i < entries.size(); ++i)
    EXPECT_EQ(load_request(dir / entries[i].file), suite[i]);
  auto manifest = nlohmann::json::parse(read_text_file(dir / "manifest.json"));
  EXPECT_EQ(manifest["policy_id"], "library-policyset-1");
  EXPECT_EQ(manifest["strategy"], "simple");
  EXPECT_EQ(manifest["count"], 6);
  EXPECT_EQ(manifest["requests"][0]["id"], "req_simple_0001");
  EXPECT_EQ(manifest["requests"][0]["file"], "req_simple_0001.xml");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace xacmlcov
