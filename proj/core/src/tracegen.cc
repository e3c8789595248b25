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

#include "xacmlcov/tracegen.h"

#include <algorithm>
#include <tuple>
#include <utility>

#include "xacmlcov/errors.h"

namespace xacmlcov {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::kRuleTargetTrue:
      return "RuleTargetTrue";
    case Criterion::kRuleTargetFalse:
      return "RuleTargetFalse";
    case Criterion::kRuleConditionTrue:
      return "RuleConditionTrue";
    case Criterion::kRuleConditionFalse:
      return "RuleConditionFalse";
  }
  return "RuleTargetTrue";
}

std::string_view short_name(Criterion c) {
  switch (c) {
    case Criterion::kRuleTargetTrue:
      return "rtt";
    case Criterion::kRuleTargetFalse:
      return "rtf";
    case Criterion::kRuleConditionTrue:
      return "rct";
    case Criterion::kRuleConditionFalse:
      return "rcf";
  }
  return "rtt";
}

std::string_view display_name(Criterion c) {
  switch (c) {
    case Criterion::kRuleTargetTrue:
      return "Rule Target True";
    case Criterion::kRuleTargetFalse:
      return "Rule Target False";
    case Criterion::kRuleConditionTrue:
      return "Rule Condition True";
    case Criterion::kRuleConditionFalse:
      return "Rule Condition False";
  }
  return "Rule Target True";
}

std::optional<Criterion> criterion_from_string(std::string_view s) {
  for (Criterion c : kAllCriteria)
    if (s == to_string(c) || s == short_name(c)) return c;
  return std::nullopt;
}

std::string_view to_string(Level l) {
  switch (l) {
    case Level::kPolicySet:
      return "PolicySet";
    case Level::kPolicy:
      return "Policy";
    case Level::kRule:
      return "Rule";
  }
  return "Rule";
}

bool Literal::satisfied_by(const ValueSet& request_values) const {
  bool hit = intersects(values, request_values);
  return kind == Kind::kRequireOneOf ? hit : !hit;
}

bool DimensionConstraint::satisfied_by(const ValueSet& request_values) const {
  return std::all_of(literals.begin(), literals.end(), [&](const Literal& l) {
    return l.satisfied_by(request_values);
  });
}

namespace {

struct RuleRef {
  const Policy* policy;
  const Rule* rule;
  std::size_t index;  // 1-based, document order across the policy set
};

std::vector<RuleRef> rules_of(const PolicySet& ps) {
  std::vector<RuleRef> out;
  std::size_t k = 0;
  for (const auto& p : ps.policies)
    for (const auto& r : p.rules) out.push_back({&p, &r, ++k});
  return out;
}

RuleTargetSet target_set(const PolicySet& ps, const RuleRef& ref) {
  return {{Level::kPolicySet, ps.target},
          {Level::kPolicy, ref.policy->target},
          {Level::kRule, ref.rule->target}};
}

LevelConstraint positive(const TargetEntry& entry) {
  LevelConstraint lc;
  lc.level = entry.level;
  for (Category c : kAllCategories)
    if (!entry.tuple[c].empty())
      lc[c].literals.push_back(Literal::require(entry.tuple[c]));
  return lc;
}

std::vector<LevelConstraint> positive_chain(const RuleTargetSet& ts) {
  std::vector<LevelConstraint> chain;
  chain.reserve(ts.size());
  for (const auto& e : ts) chain.push_back(positive(e));
  return chain;
}

std::string trace_id(std::size_t rule_index) {
  return "T" + std::to_string(rule_index);
}

// Numbers the traces of one rule: a lone trace keeps the bare rule id,
// several get _1, _2, ... suffixes.
void assign_ids(std::vector<Trace>& traces, std::size_t rule_index) {
  for (std::size_t i = 0; i < traces.size(); ++i) {
    traces[i].id = trace_id(rule_index);
    if (traces.size() > 1) traces[i].id += "_" + std::to_string(i + 1);
  }
}

// ---------------------------------------------------------------------------
// Condition normal forms.

struct Lit {
  bool positive;
  AttributeValue value;

  friend bool operator==(const Lit&, const Lit&) = default;
  friend bool operator<(const Lit& a, const Lit& b) {
    return std::tie(a.value, a.positive) < std::tie(b.value, b.positive);
  }
};

// A clause (CNF) or term (DNF): literals in first-occurrence order.
using Junction = std::vector<Lit>;
using NormalForm = std::vector<Junction>;

constexpr std::size_t kMaxJunctions = 4096;

void append_unique(Junction& into, const Junction& from) {
  for (const auto& l : from)
    if (std::find(into.begin(), into.end(), l) == into.end()) into.push_back(l);
}

bool complementary(const Junction& j) {
  for (const auto& a : j)
    for (const auto& b : j)
      if (a.positive && !b.positive && a.value == b.value) return true;
  return false;
}

Junction sorted(Junction j) {
  std::sort(j.begin(), j.end());
  return j;
}

// Drops junctions that contain a literal and its complement (tautological
// clauses, contradictory terms) and exact duplicates.
NormalForm simplify(const NormalForm& nf) {
  NormalForm out;
  std::vector<Junction> keys;
  for (const auto& j : nf) {
    if (complementary(j)) continue;
    Junction key = sorted(j);
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
    keys.push_back(std::move(key));
    out.push_back(j);
  }
  return out;
}

// CNF when `cnf` is set (AND of OR-clauses), DNF otherwise (OR of
// AND-terms), of `c` if `positive`, else of its negation.
NormalForm normal_form(const Condition& c, bool positive, bool cnf) {
  switch (c.kind()) {
    case Condition::Kind::kPredicate:
      return {{Lit{positive, c.value()}}};
    case Condition::Kind::kNot:
      return normal_form(c.operands().front(), !positive, cnf);
    case Condition::Kind::kAnd:
    case Condition::Kind::kOr:
      break;
  }
  bool conjunction = (c.kind() == Condition::Kind::kAnd) == positive;
  NormalForm acc;
  if (conjunction == cnf) {
    // Same operator as the outer level: concatenate.
    for (const auto& op : c.operands()) {
      NormalForm part = normal_form(op, positive, cnf);
      acc.insert(acc.end(), part.begin(), part.end());
      if (acc.size() > kMaxJunctions)
        throw UnsupportedCondition("condition normal form too large");
    }
    return simplify(acc);
  }
  // Inner operator: distribute.
  acc.push_back({});
  for (const auto& op : c.operands()) {
    NormalForm part = normal_form(op, positive, cnf);
    if (acc.size() * part.size() > kMaxJunctions)
      throw UnsupportedCondition("condition normal form too large");
    NormalForm next;
    for (const auto& a : acc) {
      for (const auto& b : part) {
        Junction j = a;
        append_unique(j, b);
        next.push_back(std::move(j));
      }
    }
    acc = simplify(next);
  }
  return acc;
}

struct PlacedLiteral {
  Category category;
  Literal literal;
};

// A CNF clause becomes one literal: positive predicates of one category form
// a RequireOneOf; a single negated predicate is a ForbidAllOf.
PlacedLiteral clause_literal(const Junction& clause, const std::string& rule_id) {
  if (clause.size() == 1 && !clause.front().positive) {
    return {clause.front().value.category(),
            Literal::forbid({clause.front().value})};
  }
  Category cat = clause.front().value.category();
  ValueSet values;
  for (const auto& l : clause) {
    if (!l.positive)
      throw UnsupportedCondition(
          "rule '" + rule_id +
          "': clause mixes negated predicates with alternatives");
    if (l.value.category() != cat)
      throw UnsupportedCondition(
          "rule '" + rule_id +
          "': clause has alternatives over different categories");
    values.insert(l.value);
  }
  return {cat, Literal::require(std::move(values))};
}

std::vector<PlacedLiteral> term_literals(const Junction& term) {
  std::vector<PlacedLiteral> out;
  for (const auto& l : term)
    out.push_back({l.value.category(), l.positive ? Literal::require({l.value})
                                                  : Literal::forbid({l.value})});
  return out;
}

// Removes forbidden values from the RequireOneOf literals sharing the
// dimension, drops repeated literals and folds all ForbidAllOf literals into
// one, placed last. False if a RequireOneOf empties.
bool normalize(DimensionConstraint& dc) {
  ValueSet forbidden;
  for (const auto& l : dc.literals)
    if (l.kind == Literal::Kind::kForbidAllOf)
      forbidden.insert(l.values.begin(), l.values.end());
  std::vector<Literal> out;
  for (auto l : dc.literals) {
    if (l.kind == Literal::Kind::kForbidAllOf) continue;
    for (const auto& v : forbidden) l.values.erase(v);
    if (l.values.empty()) return false;
    if (std::find(out.begin(), out.end(), l) == out.end())
      out.push_back(std::move(l));
  }
  if (!forbidden.empty()) out.push_back(Literal::forbid(std::move(forbidden)));
  dc.literals = std::move(out);
  return true;
}

// Appends literals to the rule level of `trace`. False if the result is
// unsatisfiable.
bool add_to_rule_level(Trace& trace, const std::vector<PlacedLiteral>& lits) {
  LevelConstraint& rule_level = trace.chain.back();
  for (const auto& pl : lits) rule_level[pl.category].literals.push_back(pl.literal);
  for (Category c : kAllCategories)
    if (!normalize(rule_level[c])) return false;
  return witness(trace).has_value();
}

Trace base_trace(const PolicySet& ps, const RuleRef& ref, Criterion c) {
  Trace t;
  t.id = trace_id(ref.index);
  t.criterion = c;
  t.rule_id = ref.rule->id;
  t.chain = positive_chain(target_set(ps, ref));
  return t;
}

TraceSet empty_set(const PolicySet& ps, Criterion c) {
  TraceSet ts;
  ts.criterion = c;
  ts.policy_id = ps.id;
  return ts;
}

// Rule-target dimension d can be missed while the enclosing targets still
// hold iff every enclosing constraint on d admits a value outside the rule's
// own set for d.
bool negatable(const RuleTargetSet& ts, Category d) {
  const ValueSet& rule_values = ts.back().tuple[d];
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const ValueSet& enclosing = ts[i].tuple[d];
    if (enclosing.empty()) continue;
    bool escapes = std::any_of(enclosing.begin(), enclosing.end(),
                               [&](const AttributeValue& v) {
                                 return rule_values.count(v) == 0;
                               });
    if (!escapes) return false;
  }
  return true;
}

}  // namespace

RuleTargetSet rule_target_set(const PolicySet& ps, const RulePath& path) {
  for (const auto& ref : rules_of(ps))
    if (ref.policy->id == path.policy_id && ref.rule->id == path.rule_id)
      return target_set(ps, ref);
  throw UnknownRule("no rule '" + path.rule_id + "' in policy '" +
                    path.policy_id + "'");
}

TraceSet gen_rtt(const PolicySet& ps) {
  TraceSet out = empty_set(ps, Criterion::kRuleTargetTrue);
  for (const auto& ref : rules_of(ps)) {
    Trace t = base_trace(ps, ref, Criterion::kRuleTargetTrue);
    if (!ref.rule->condition) t.effect = ref.rule->effect;
    out.traces.push_back(std::move(t));
  }
  return out;
}

TraceSet gen_rtf(const PolicySet& ps) {
  TraceSet out = empty_set(ps, Criterion::kRuleTargetFalse);
  for (const auto& ref : rules_of(ps)) {
    RuleTargetSet ts = target_set(ps, ref);
    const TargetTuple& rule_tuple = ts.back().tuple;
    std::vector<Category> eligible;
    for (Category c : kAllCategories)
      if (!rule_tuple[c].empty() && negatable(ts, c)) eligible.push_back(c);
    if (eligible.empty()) continue;

    const std::size_t m = eligible.size();
    std::vector<Trace> traces;
    // Keep-patterns in binary counting order, first eligible dimension most
    // significant; a set bit keeps that dimension positive. The all-ones
    // pattern is the target-true case and is skipped.
    for (std::size_t keep = 0; keep + 1 < (std::size_t{1} << m); ++keep) {
      Trace t = base_trace(ps, ref, Criterion::kRuleTargetFalse);
      LevelConstraint& rule_level = t.chain.back();
      for (std::size_t i = 0; i < m; ++i) {
        bool kept = (keep >> (m - 1 - i)) & 1U;
        if (kept) continue;
        Category c = eligible[i];
        rule_level[c].literals = {Literal::forbid(rule_tuple[c])};
      }
      if (witness(t)) traces.push_back(std::move(t));
    }
    assign_ids(traces, ref.index);
    for (auto& t : traces) out.traces.push_back(std::move(t));
  }
  return out;
}

TraceSet gen_rct(const PolicySet& ps) {
  TraceSet out = empty_set(ps, Criterion::kRuleConditionTrue);
  for (const auto& ref : rules_of(ps)) {
    Trace t = base_trace(ps, ref, Criterion::kRuleConditionTrue);
    t.effect = ref.rule->effect;
    if (ref.rule->condition) {
      std::vector<PlacedLiteral> lits;
      for (const auto& clause : normal_form(*ref.rule->condition, true, true))
        lits.push_back(clause_literal(clause, ref.rule->id));
      // An unsatisfiable condition leaves nothing to cover.
      if (!add_to_rule_level(t, lits)) continue;
    }
    out.traces.push_back(std::move(t));
  }
  return out;
}

TraceSet gen_rcf(const PolicySet& ps) {
  TraceSet out = empty_set(ps, Criterion::kRuleConditionFalse);
  for (const auto& ref : rules_of(ps)) {
    if (!ref.rule->condition) continue;
    std::vector<Trace> traces;
    for (const auto& term : normal_form(*ref.rule->condition, false, false)) {
      Trace t = base_trace(ps, ref, Criterion::kRuleConditionFalse);
      if (add_to_rule_level(t, term_literals(term))) traces.push_back(std::move(t));
    }
    assign_ids(traces, ref.index);
    for (auto& t : traces) out.traces.push_back(std::move(t));
  }
  return out;
}

TraceSet generate(const PolicySet& ps, Criterion c) {
  switch (c) {
    case Criterion::kRuleTargetTrue:
      return gen_rtt(ps);
    case Criterion::kRuleTargetFalse:
      return gen_rtf(ps);
    case Criterion::kRuleConditionTrue:
      return gen_rct(ps);
    case Criterion::kRuleConditionFalse:
      return gen_rcf(ps);
  }
  return gen_rtt(ps);
}

std::vector<TraceSet> generate_all(const PolicySet& ps) {
  std::vector<TraceSet> out;
  for (Criterion c : kAllCriteria) out.push_back(generate(ps, c));
  return out;
}

std::optional<RequestTuple> witness(const Trace& trace) {
  RequestTuple req;
  for (Category c : kAllCategories) {
    ValueSet forbidden;
    for (const auto& level : trace.chain)
      for (const auto& l : level[c].literals)
        if (l.kind == Literal::Kind::kForbidAllOf)
          forbidden.insert(l.values.begin(), l.values.end());
    for (const auto& level : trace.chain) {
      for (const auto& l : level[c].literals) {
        if (l.kind != Literal::Kind::kRequireOneOf) continue;
        auto pick = std::find_if(l.values.begin(), l.values.end(),
                                 [&](const AttributeValue& v) {
                                   return forbidden.count(v) == 0;
                                 });
        if (pick == l.values.end()) return std::nullopt;
        req.insert(*pick);
      }
    }
  }
  return req;
}

namespace {

std::string join_values(const ValueSet& values, std::string_view prefix,
                        std::string_view sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += prefix;
    out += v.value();
  }
  return out;
}

std::string render_literal(const Literal& l, bool alone) {
  bool many = l.values.size() > 1;
  std::string body = l.kind == Literal::Kind::kRequireOneOf
                         ? join_values(l.values, "", " ∨ ")
                         : join_values(l.values, "≠", " ∧ ");
  return many && !alone ? "{" + body + "}" : body;
}

std::string render_dimension(const DimensionConstraint& dc) {
  if (dc.is_any()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < dc.literals.size(); ++i) {
    if (i > 0) out += " ∧ ";
    out += render_literal(dc.literals[i], dc.literals.size() == 1);
  }
  return out + "}";
}

}  // namespace

std::string render(const Trace& trace) {
  std::string out = trace.id + " = {";
  for (std::size_t i = 0; i < trace.chain.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(";
    for (Category c : kAllCategories) {
      if (c != Category::kSubject) out += ", ";
      out += render_dimension(trace.chain[i][c]);
    }
    out += ")";
  }
  out += ", ";
  out += trace.effect ? std::string(to_string(*trace.effect)) : "-";
  return out + "}";
}

}  // namespace xacmlcov
