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

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "xacmlcov/errors.h"

namespace xacmlcov {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kSubject:
      return "subject";
    case Category::kResource:
      return "resource";
    case Category::kAction:
      return "action";
    case Category::kEnvironment:
      return "environment";
  }
  return "unknown";
}

std::optional<Category> category_from_string(std::string_view name) {
  for (Category c : kAllCategories)
    if (to_string(c) == name) return c;
  return std::nullopt;
}

AttributeValue::AttributeValue(Category category, std::string attribute_id,
                               std::string value, std::string data_type)
    : category_(category),
      attribute_id_(std::move(attribute_id)),
      value_(std::move(value)),
      data_type_(std::move(data_type)) {
  if (attribute_id_.empty())
    throw std::invalid_argument("attribute value with empty attribute id");
  if (value_.empty())
    throw std::invalid_argument("attribute value with empty literal (" +
                                attribute_id_ + ")");
}

bool operator==(const AttributeValue& a, const AttributeValue& b) {
  return a.category_ == b.category_ && a.attribute_id_ == b.attribute_id_ &&
         a.value_ == b.value_;
}

bool operator<(const AttributeValue& a, const AttributeValue& b) {
  return std::tie(a.category_, a.attribute_id_, a.value_) <
         std::tie(b.category_, b.attribute_id_, b.value_);
}

std::ostream& operator<<(std::ostream& os, const AttributeValue& v) {
  return os << to_string(v.category()) << ':' << v.attribute_id() << '='
            << v.value();
}

bool intersects(const ValueSet& a, const ValueSet& b) {
  // Both sets are ordered the same way; walk them in lockstep.
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

Condition::Condition(Kind kind, std::vector<Condition> operands,
                     std::optional<AttributeValue> value)
    : kind_(kind), operands_(std::move(operands)), value_(std::move(value)) {}

Condition Condition::all_of(std::vector<Condition> operands) {
  if (operands.empty())
    throw std::invalid_argument("conjunction without operands");
  return Condition(Kind::kAnd, std::move(operands), std::nullopt);
}

Condition Condition::any_of(std::vector<Condition> operands) {
  if (operands.empty())
    throw std::invalid_argument("disjunction without operands");
  return Condition(Kind::kOr, std::move(operands), std::nullopt);
}

Condition Condition::negate(Condition operand) {
  std::vector<Condition> ops;
  ops.push_back(std::move(operand));
  return Condition(Kind::kNot, std::move(ops), std::nullopt);
}

Condition Condition::predicate(AttributeValue value) {
  return Condition(Kind::kPredicate, {}, std::move(value));
}

std::size_t Condition::size() const {
  std::size_t n = 1;
  for (const auto& op : operands_) n += op.size();
  return n;
}

bool operator==(const Condition& a, const Condition& b) {
  return a.kind_ == b.kind_ && a.operands_ == b.operands_ &&
         a.value_ == b.value_;
}

std::string_view to_string(Effect e) {
  return e == Effect::kPermit ? "Permit" : "Deny";
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::kPermit:
      return "Permit";
    case Decision::kDeny:
      return "Deny";
    case Decision::kNotApplicable:
      return "NotApplicable";
    case Decision::kIndeterminate:
      return "Indeterminate";
  }
  return "Indeterminate";
}

std::string_view to_string(CombiningAlgorithm a) {
  switch (a) {
    case CombiningAlgorithm::kFirstApplicable:
      return "first-applicable";
    case CombiningAlgorithm::kPermitOverrides:
      return "permit-overrides";
    case CombiningAlgorithm::kDenyOverrides:
      return "deny-overrides";
  }
  return "first-applicable";
}

std::optional<Effect> effect_from_string(std::string_view s) {
  if (s == "Permit") return Effect::kPermit;
  if (s == "Deny") return Effect::kDeny;
  return std::nullopt;
}

std::optional<Decision> decision_from_string(std::string_view s) {
  for (Decision d : {Decision::kPermit, Decision::kDeny,
                     Decision::kNotApplicable, Decision::kIndeterminate})
    if (to_string(d) == s) return d;
  return std::nullopt;
}

std::optional<CombiningAlgorithm> combining_from_string(std::string_view s) {
  for (CombiningAlgorithm a : {CombiningAlgorithm::kFirstApplicable,
                               CombiningAlgorithm::kPermitOverrides,
                               CombiningAlgorithm::kDenyOverrides})
    if (to_string(a) == s) return a;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, Effect e) {
  return os << to_string(e);
}
std::ostream& operator<<(std::ostream& os, Decision d) {
  return os << to_string(d);
}
std::ostream& operator<<(std::ostream& os, CombiningAlgorithm a) {
  return os << to_string(a);
}

namespace {

template <typename Range, typename IdOf>
void check_unique_ids(const Range& items, IdOf id_of, const std::string& what,
                      const std::string& scope) {
  std::set<std::string> seen;
  for (const auto& item : items) {
    const std::string& id = id_of(item);
    if (id.empty()) throw SchemaError(what + " without id in " + scope);
    if (!seen.insert(id).second)
      throw SchemaError("duplicate " + what + " id '" + id + "' in " + scope);
  }
}

}  // namespace

void validate(const PolicySet& ps) {
  if (ps.id.empty()) throw SchemaError("policy set without id");
  if (ps.policies.empty())
    throw SchemaError("policy set '" + ps.id + "' has no policies");
  check_unique_ids(
      ps.policies, [](const Policy& p) -> const std::string& { return p.id; },
      "policy", "policy set '" + ps.id + "'");
  for (const auto& p : ps.policies) {
    if (p.rules.empty())
      throw SchemaError("policy '" + p.id + "' has no rules");
    check_unique_ids(
        p.rules, [](const Rule& r) -> const std::string& { return r.id; },
        "rule", "policy '" + p.id + "'");
  }
}

bool tuple_matches(const TargetTuple& tuple, const RequestTuple& req) {
  return std::all_of(kAllCategories.begin(), kAllCategories.end(),
                     [&](Category c) {
                       return tuple[c].empty() || intersects(tuple[c], req[c]);
                     });
}

bool eval_condition(const Condition& cond, const RequestTuple& req) {
  const auto& ops = cond.operands();
  switch (cond.kind()) {
    case Condition::Kind::kAnd:
      return std::all_of(ops.begin(), ops.end(), [&](const Condition& c) {
        return eval_condition(c, req);
      });
    case Condition::Kind::kOr:
      return std::any_of(ops.begin(), ops.end(), [&](const Condition& c) {
        return eval_condition(c, req);
      });
    case Condition::Kind::kNot:
      return !eval_condition(ops.front(), req);
    case Condition::Kind::kPredicate:
      return req[cond.value().category()].count(cond.value()) > 0;
  }
  return false;
}

}  // namespace xacmlcov
