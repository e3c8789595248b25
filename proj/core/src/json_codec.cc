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

#include <array>
#include <cmath>
#include <stdexcept>

#include "xacmlcov/errors.h"

namespace xacmlcov {
namespace {

constexpr std::array<const char*, 4> kDimensionKeys = {
    "subjects", "resources", "actions", "environments"};

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw FormatError(where + ": missing field '" + key + "'");
  return *it;
}

std::string string_member(const Json& j, const char* key,
                          const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_string())
    throw FormatError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

const Json& array_member(const Json& j, const char* key,
                         const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_array())
    throw FormatError(where + ": field '" + key + "' must be an array");
  return v;
}

std::size_t count_member(const Json& j, const char* key,
                         const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_unsigned())
    throw FormatError(where + ": field '" + key + "' must be a count");
  return v.get<std::size_t>();
}

Json values_to_json(const ValueSet& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_json(v));
  return arr;
}

ValueSet values_from_json(const Json& arr, Category c, const std::string& where) {
  if (!arr.is_array()) throw FormatError(where + ": expected an array of values");
  ValueSet out;
  for (const auto& v : arr) out.insert(attribute_value_from_json(v, c));
  return out;
}

Level level_at(std::size_t i, std::size_t n) {
  // Outermost first; the last entry is always the rule itself.
  std::size_t from_rule = n - 1 - i;
  if (from_rule == 0) return Level::kRule;
  if (from_rule == 1) return Level::kPolicy;
  return Level::kPolicySet;
}

Trace trace_from_json(const Json& j, Criterion criterion,
                      const std::string& where) {
  Trace t;
  t.criterion = criterion;
  t.id = string_member(j, "id", where);
  std::string here = where + " trace '" + t.id + "'";
  t.rule_id = string_member(j, "rule_id", here);
  const Json& chain = array_member(j, "chain", here);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Json& lvl = chain[i];
    if (!lvl.is_array() || lvl.size() != 4)
      throw FormatError(here + ": chain entries must hold four dimensions");
    LevelConstraint lc;
    lc.level = level_at(i, chain.size());
    for (Category c : kAllCategories) {
      const Json& dim = lvl[index_of(c)];
      if (!dim.is_array())
        throw FormatError(here + ": dimension must be a list of literals");
      for (const auto& lit : dim) {
        if (!lit.is_object() || lit.size() != 1)
          throw FormatError(here + ": literal must be {\"require\":[..]} or "
                                   "{\"forbid\":[..]}");
        if (lit.contains("require")) {
          lc[c].literals.push_back(
              Literal::require(values_from_json(lit["require"], c, here)));
        } else if (lit.contains("forbid")) {
          lc[c].literals.push_back(
              Literal::forbid(values_from_json(lit["forbid"], c, here)));
        } else {
          throw FormatError(here + ": unknown literal kind");
        }
        if (lc[c].literals.back().values.empty())
          throw FormatError(here + ": literal with no values");
      }
    }
    t.chain.push_back(std::move(lc));
  }
  if (t.chain.empty()) throw FormatError(here + ": empty chain");
  const Json& effect = member(j, "effect", here);
  if (!effect.is_null()) {
    if (!effect.is_string()) throw FormatError(here + ": bad effect");
    auto e = effect_from_string(effect.get<std::string>());
    if (!e) throw FormatError(here + ": bad effect '" + effect.get<std::string>() + "'");
    t.effect = *e;
  }
  return t;
}

Decision decision_field(const Json& j, const std::string& where) {
  std::string s = string_member(j, "decision", where);
  auto d = decision_from_string(s);
  if (!d) throw FormatError(where + ": unknown decision '" + s + "'");
  return *d;
}

}  // namespace

Json to_json(const AttributeValue& v) {
  return {{"category", to_string(v.category())},
          {"attribute_id", v.attribute_id()},
          {"data_type", v.data_type()},
          {"value", v.value()}};
}

AttributeValue attribute_value_from_json(const Json& j,
                                         std::optional<Category> expected) {
  const std::string where = "attribute value";
  Category c;
  if (j.is_object() && j.contains("category")) {
    std::string name = string_member(j, "category", where);
    auto parsed = category_from_string(name);
    if (!parsed) throw FormatError(where + ": unknown category '" + name + "'");
    if (expected && *parsed != *expected)
      throw FormatError(where + ": category '" + name + "' in the " +
                        std::string(to_string(*expected)) + " dimension");
    c = *parsed;
  } else if (expected) {
    c = *expected;
  } else {
    throw FormatError(where + ": missing field 'category'");
  }
  std::string id = string_member(j, "attribute_id", where);
  std::string value = string_member(j, "value", where);
  std::string data_type(kStringDataType);
  if (j.contains("data_type")) data_type = string_member(j, "data_type", where);
  if (id.empty() || value.empty())
    throw FormatError(where + ": empty attribute_id or value");
  return AttributeValue(c, std::move(id), std::move(value), std::move(data_type));
}

Json to_json(const RequestTuple& req) {
  Json j = Json::object();
  for (Category c : kAllCategories)
    j[kDimensionKeys[index_of(c)]] = values_to_json(req[c]);
  return j;
}

RequestTuple request_tuple_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("request tuple: expected an object");
  RequestTuple req;
  for (Category c : kAllCategories) {
    auto it = j.find(kDimensionKeys[index_of(c)]);
    if (it == j.end()) continue;
    req.insert_all(values_from_json(*it, c, "request tuple"));
  }
  return req;
}

Json to_json(const TraceSet& ts) {
  Json traces = Json::array();
  for (const auto& t : ts.traces) {
    Json chain = Json::array();
    for (const auto& lvl : t.chain) {
      Json dims = Json::array();
      for (Category c : kAllCategories) {
        Json lits = Json::array();
        for (const auto& l : lvl[c].literals) {
          const char* key =
              l.kind == Literal::Kind::kRequireOneOf ? "require" : "forbid";
          lits.push_back({{key, values_to_json(l.values)}});
        }
        dims.push_back(std::move(lits));
      }
      chain.push_back(std::move(dims));
    }
    traces.push_back({{"id", t.id},
                      {"rule_id", t.rule_id},
                      {"chain", std::move(chain)},
                      {"effect", t.effect ? Json(to_string(*t.effect)) : Json()}});
  }
  return {{"criterion", to_string(ts.criterion)},
          {"policy_id", ts.policy_id},
          {"traces", std::move(traces)}};
}

TraceSet trace_set_from_json(const Json& j) {
  const std::string where = "trace set";
  TraceSet ts;
  std::string name = string_member(j, "criterion", where);
  auto c = criterion_from_string(name);
  if (!c) throw FormatError(where + ": unknown criterion '" + name + "'");
  ts.criterion = *c;
  ts.policy_id = string_member(j, "policy_id", where);
  for (const auto& t : array_member(j, "traces", where))
    ts.traces.push_back(trace_from_json(t, ts.criterion, where));
  return ts;
}

std::vector<TraceSet> trace_sets_from_json(const Json& j) {
  std::vector<TraceSet> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(trace_set_from_json(item));
  } else {
    out.push_back(trace_set_from_json(j));
  }
  return out;
}

Json to_json(const std::vector<TraceSet>& sets) {
  Json arr = Json::array();
  for (const auto& ts : sets) arr.push_back(to_json(ts));
  return arr;
}

Json to_json(const Event& e) {
  if (const auto* req = std::get_if<RequestEvent>(&e))
    return {{"type", "request"}, {"id", req->request_id}, {"tuple", to_json(req->tuple)}};
  if (const auto* resp = std::get_if<ResponseEvent>(&e))
    return {{"type", "response"},
            {"id", resp->request_id},
            {"decision", to_string(resp->decision)}};
  return {{"type", "flush"}};
}

Event event_from_json(const Json& j) {
  const std::string where = "event";
  std::string type = string_member(j, "type", where);
  if (type == "request") {
    RequestEvent e;
    e.request_id = string_member(j, "id", where);
    e.tuple = request_tuple_from_json(member(j, "tuple", where));
    return e;
  }
  if (type == "response") {
    ResponseEvent e;
    e.request_id = string_member(j, "id", where);
    e.decision = decision_field(j, where);
    return e;
  }
  if (type == "flush") return FlushEvent{};
  throw FormatError(where + ": unknown type '" + type + "'");
}

std::string to_event_line(const Event& e) { return to_json(e).dump(); }

Event parse_event_line(std::string_view line) {
  return event_from_json(parse_json(line));
}

Json to_json(const CoverageReport& r) {
  Json j = Json::object();
  for (const auto& cc : r.criteria) {
    Json entry = {{"total", cc.total},
                  {"covered", cc.covered},
                  {"percentage", cc.percentage()},
                  {"uncovered", cc.uncovered}};
    if (cc.empty()) entry["empty"] = true;
    j[std::string(to_string(cc.criterion))] = std::move(entry);
  }
  j["meta"] = {{"requests", r.requests},
               {"responses", r.responses},
               {"skipped_events", r.skipped_events}};
  return j;
}

CoverageReport report_from_json(const Json& j) {
  const std::string where = "coverage report";
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  CoverageReport r;
  for (Criterion c : kAllCriteria) {
    auto it = j.find(std::string(to_string(c)));
    if (it == j.end()) continue;
    CriterionCoverage cc;
    cc.criterion = c;
    std::string here = where + " " + std::string(to_string(c));
    cc.total = count_member(*it, "total", here);
    cc.covered = count_member(*it, "covered", here);
    const Json& pct = member(*it, "percentage", here);
    if (!pct.is_number()) throw FormatError(here + ": percentage must be a number");
    cc.hundredths = std::llround(pct.get<double>() * 100.0);
    for (const auto& id : array_member(*it, "uncovered", here)) {
      if (!id.is_string()) throw FormatError(here + ": uncovered ids must be strings");
      cc.uncovered.push_back(id.get<std::string>());
    }
    r.criteria.push_back(std::move(cc));
  }
  if (auto it = j.find("meta"); it != j.end()) {
    r.requests = count_member(*it, "requests", where);
    r.responses = count_member(*it, "responses", where);
    r.skipped_events = count_member(*it, "skipped_events", where);
  }
  return r;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace xacmlcov
