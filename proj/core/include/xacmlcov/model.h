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

// Core domain types: attribute values, target and request tuples, conditions,
// rules, policies, policy sets and decisions, plus the two matching
// predicates every other module builds on.
//
// All types are plain values. Once built they are never mutated by the
// library, so they can be shared freely between threads.

#ifndef XACMLCOV_MODEL_H_
#define XACMLCOV_MODEL_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace xacmlcov {

enum class Category : std::uint8_t { kSubject, kResource, kAction, kEnvironment };

inline constexpr std::array<Category, 4> kAllCategories = {
    Category::kSubject, Category::kResource, Category::kAction,
    Category::kEnvironment};

inline constexpr std::size_t index_of(Category c) {
  return static_cast<std::size_t>(c);
}

// Lower-case names: "subject", "resource", "action", "environment".
std::string_view to_string(Category c);
std::optional<Category> category_from_string(std::string_view name);

inline constexpr std::string_view kStringDataType =
    "http://www.w3.org/2001/XMLSchema#string";

// One typed attribute occurrence. Identity is (category, attribute_id, value);
// data_type is carried along but never takes part in matching or ordering.
class AttributeValue {
 public:
  // Throws std::invalid_argument if attribute_id or value is empty.
  AttributeValue(Category category, std::string attribute_id,
                 std::string value,
                 std::string data_type = std::string(kStringDataType));

  Category category() const { return category_; }
  const std::string& attribute_id() const { return attribute_id_; }
  const std::string& value() const { return value_; }
  const std::string& data_type() const { return data_type_; }

  friend bool operator==(const AttributeValue& a, const AttributeValue& b);
  friend bool operator<(const AttributeValue& a, const AttributeValue& b);

 private:
  Category category_;
  std::string attribute_id_;
  std::string value_;
  std::string data_type_;
};

std::ostream& operator<<(std::ostream& os, const AttributeValue& v);

using ValueSet = std::set<AttributeValue>;

bool intersects(const ValueSet& a, const ValueSet& b);

// Four per-category value sets. Values are routed to the set of their own
// category on insertion, so a dimension never holds a foreign category.
template <typename Tag>
class AttributeTuple {
 public:
  AttributeTuple() = default;
  AttributeTuple(std::initializer_list<AttributeValue> values) {
    for (const auto& v : values) insert(v);
  }

  void insert(const AttributeValue& v) { sets_[index_of(v.category())].insert(v); }
  void insert_all(const ValueSet& values) {
    for (const auto& v : values) insert(v);
  }
  void clear(Category c) { sets_[index_of(c)].clear(); }

  const ValueSet& operator[](Category c) const { return sets_[index_of(c)]; }
  const ValueSet& subjects() const { return (*this)[Category::kSubject]; }
  const ValueSet& resources() const { return (*this)[Category::kResource]; }
  const ValueSet& actions() const { return (*this)[Category::kAction]; }
  const ValueSet& environments() const {
    return (*this)[Category::kEnvironment];
  }

  bool empty() const {
    for (const auto& s : sets_)
      if (!s.empty()) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& s : sets_) n += s.size();
    return n;
  }

  friend bool operator==(const AttributeTuple&, const AttributeTuple&) = default;

 private:
  std::array<ValueSet, 4> sets_;
};

struct TargetTag {};
struct RequestTag {};

// An empty dimension means "any".
using TargetTuple = AttributeTuple<TargetTag>;
using RequestTuple = AttributeTuple<RequestTag>;

// Boolean expression over "the request carries this attribute value".
class Condition {
 public:
  enum class Kind : std::uint8_t { kAnd, kOr, kNot, kPredicate };

  // all_of/any_of require at least one operand (std::invalid_argument).
  static Condition all_of(std::vector<Condition> operands);
  static Condition any_of(std::vector<Condition> operands);
  static Condition negate(Condition operand);
  static Condition predicate(AttributeValue value);

  Kind kind() const { return kind_; }
  const std::vector<Condition>& operands() const { return operands_; }
  // Only valid for kPredicate.
  const AttributeValue& value() const { return *value_; }

  // Number of nodes in the tree.
  std::size_t size() const;

  friend bool operator==(const Condition& a, const Condition& b);

 private:
  Condition(Kind kind, std::vector<Condition> operands,
            std::optional<AttributeValue> value);

  Kind kind_;
  std::vector<Condition> operands_;
  std::optional<AttributeValue> value_;
};

enum class Effect : std::uint8_t { kPermit, kDeny };
enum class Decision : std::uint8_t { kPermit, kDeny, kNotApplicable, kIndeterminate };
enum class CombiningAlgorithm : std::uint8_t {
  kFirstApplicable,
  kPermitOverrides,
  kDenyOverrides
};

inline constexpr Decision to_decision(Effect e) {
  return e == Effect::kPermit ? Decision::kPermit : Decision::kDeny;
}

// "Permit"/"Deny"/"NotApplicable"/"Indeterminate".
std::string_view to_string(Effect e);
std::string_view to_string(Decision d);
std::string_view to_string(CombiningAlgorithm a);
std::optional<Effect> effect_from_string(std::string_view s);
std::optional<Decision> decision_from_string(std::string_view s);
std::optional<CombiningAlgorithm> combining_from_string(std::string_view s);

std::ostream& operator<<(std::ostream& os, Effect e);
std::ostream& operator<<(std::ostream& os, Decision d);
std::ostream& operator<<(std::ostream& os, CombiningAlgorithm a);

struct Rule {
  std::string id;
  TargetTuple target;
  std::optional<Condition> condition;
  Effect effect = Effect::kDeny;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Policy {
  std::string id;
  TargetTuple target;
  std::vector<Rule> rules;
  CombiningAlgorithm rule_combining = CombiningAlgorithm::kFirstApplicable;

  friend bool operator==(const Policy&, const Policy&) = default;
};

struct PolicySet {
  std::string id;
  TargetTuple target;
  std::vector<Policy> policies;
  CombiningAlgorithm policy_combining = CombiningAlgorithm::kFirstApplicable;
  // Set when the source document was a bare <Policy> wrapped on parse.
  bool implicit = false;

  friend bool operator==(const PolicySet&, const PolicySet&) = default;
};

// Checks the structural invariants: at least one policy, at least one rule
// per policy, non-empty ids unique per level. Throws SchemaError.
void validate(const PolicySet& ps);

// True iff every dimension of `tuple` is empty or shares a value with the
// request's dimension of the same category.
bool tuple_matches(const TargetTuple& tuple, const RequestTuple& req);

// Two-valued evaluation: a predicate holds iff the request carries an equal
// attribute value; absent attributes make it false.
bool eval_condition(const Condition& cond, const RequestTuple& req);

}  // namespace xacmlcov

#endif  // XACMLCOV_MODEL_H_
