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


#include "xacmlcov/model.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "xacmlcov/errors.h"
#include "xacmlcov/xacml_io.h"

namespace xacmlcov {
namespace {

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

TEST(AttributeValueTest, RejectsEmptyIdOrValue) {
  EXPECT_THROW(AttributeValue(Category::kSubject, "", "x"), std::invalid_argument);
  EXPECT_THROW(AttributeValue(Category::kSubject, "id", ""), std::invalid_argument);
}

TEST(AttributeValueTest, DataTypeIsNotPartOfIdentity) {
  AttributeValue a(Category::kResource, "id", "books");
  AttributeValue b(Category::kResource, "id", "books", "urn:other-type");
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a < b);
  EXPECT_FALSE(b < a);
}

TEST(AttributeValueTest, OrdersByCategoryThenIdThenValue) {
  EXPECT_LT(subject("z"), resource("a"));
  EXPECT_LT(AttributeValue(Category::kSubject, "a", "z"),
            AttributeValue(Category::kSubject, "b", "a"));
  EXPECT_LT(subject("Julius"), subject("Marc"));
}

TEST(CategoryTest, StringRoundTrip) {
  for (Category c : kAllCategories) {
    auto back = category_from_string(to_string(c));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, c);
  }
  EXPECT_FALSE(category_from_string("subjects").has_value());
}

TEST(TupleMatchTest, EmptyDimensionMatchesAnything) {
  TargetTuple any;
  EXPECT_TRUE(tuple_matches(any, RequestTuple{}));
  EXPECT_TRUE(tuple_matches(any, RequestTuple{subject("Julius")}));
}

TEST(TupleMatchTest, AnyCommonValuePerDimension) {
  TargetTuple t{resource("books"), action("write"), action("read")};
  EXPECT_TRUE(tuple_matches(t, RequestTuple{resource("books"), action("read")}));
  EXPECT_TRUE(tuple_matches(
      t, RequestTuple{resource("books"), resource("dvd"), action("write")}));
  EXPECT_FALSE(tuple_matches(t, RequestTuple{resource("books")}));
  EXPECT_FALSE(tuple_matches(t, RequestTuple{resource("journal"), action("read")}));
}

TEST(TupleMatchTest, AttributeIdDistinguishesValues) {
  TargetTuple t{role("Julius")};
  EXPECT_FALSE(tuple_matches(t, RequestTuple{subject("Julius")}));
}

TEST(ConditionTest, TwoValuedEvaluation) {
  Condition c = Condition::any_of(
      {Condition::predicate(role("professor")), Condition::predicate(role("administrator"))});
  EXPECT_TRUE(eval_condition(c, RequestTuple{role("professor")}));
  EXPECT_FALSE(eval_condition(c, RequestTuple{subject("Julius")}));
  EXPECT_TRUE(eval_condition(Condition::negate(c), RequestTuple{}));
  EXPECT_FALSE(eval_condition(
      Condition::all_of({Condition::predicate(role("professor")),
                         Condition::negate(Condition::predicate(subject("Julius")))}),
      RequestTuple{role("professor"), subject("Julius")}));
}

TEST(ConditionTest, RejectsEmptyJunctions) {
  EXPECT_THROW(Condition::all_of({}), std::invalid_argument);
  EXPECT_THROW(Condition::any_of({}), std::invalid_argument);
}

TEST(ConditionTest, SizeCountsNodes) {
  Condition c = Condition::negate(Condition::all_of(
      {Condition::predicate(role("a")), Condition::predicate(role("b"))}));
  EXPECT_EQ(c.size(), 4u);
}

TEST(EnumStringsTest, RoundTrip) {
  for (Decision d : {Decision::kPermit, Decision::kDeny, Decision::kNotApplicable,
                     Decision::kIndeterminate})
    EXPECT_EQ(decision_from_string(to_string(d)), d);
  for (Effect e : {Effect::kPermit, Effect::kDeny})
    EXPECT_EQ(effect_from_string(to_string(e)), e);
  for (auto a : {CombiningAlgorithm::kFirstApplicable,
                 CombiningAlgorithm::kPermitOverrides,
                 CombiningAlgorithm::kDenyOverrides})
    EXPECT_EQ(combining_from_string(to_string(a)), a);
  EXPECT_EQ(to_string(Decision::kNotApplicable), "NotApplicable");
  EXPECT_FALSE(decision_from_string("permit").has_value());
}

PolicySet minimal() {
  PolicySet ps;
  ps.id = "ps";
  Policy p;
  p.id = "p";
  p.rules.push_back(Rule{"r", {}, std::nullopt, Effect::kPermit});
  ps.policies.push_back(p);
  return ps;
}

TEST(ValidateTest, AcceptsMinimal) { EXPECT_NO_THROW(validate(minimal())); }

TEST(ValidateTest, RejectsStructuralProblems) {
  PolicySet ps = minimal();
  ps.policies[0].rules.push_back(ps.policies[0].rules[0]);
  EXPECT_THROW(validate(ps), SchemaError);

  ps = minimal();
  ps.policies[0].rules.clear();
  EXPECT_THROW(validate(ps), SchemaError);

  ps = minimal();
  ps.policies.clear();
  EXPECT_THROW(validate(ps), SchemaError);

  ps = minimal();
  ps.policies[0].id.clear();
  EXPECT_THROW(validate(ps), SchemaError);
}

}  // namespace
}  // namespace xacmlcov
