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

#include "xacmlcov/xacml_io.h"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "xacmlcov/errors.h"
#include "xml_dom.h"

namespace xacmlcov {
namespace {

using xml::Element;

struct CategoryNames {
  Category category;
  std::string_view plural;      // <Subjects> in targets
  std::string_view single;      // <Subject> in targets and requests
  std::string_view match;       // <SubjectMatch>
  std::string_view designator;  // <SubjectAttributeDesignator>
};

constexpr std::array<CategoryNames, 4> kNames = {{
    {Category::kSubject, "Subjects", "Subject", "SubjectMatch",
     "SubjectAttributeDesignator"},
    {Category::kResource, "Resources", "Resource", "ResourceMatch",
     "ResourceAttributeDesignator"},
    {Category::kAction, "Actions", "Action", "ActionMatch",
     "ActionAttributeDesignator"},
    {Category::kEnvironment, "Environments", "Environment", "EnvironmentMatch",
     "EnvironmentAttributeDesignator"},
}};

const CategoryNames& names_of(Category c) { return kNames[index_of(c)]; }

constexpr std::string_view kRuleCombiningPrefix =
    "urn:oasis:names:tc:xacml:1.0:rule-combining-algorithm:";
constexpr std::string_view kPolicyCombiningPrefix =
    "urn:oasis:names:tc:xacml:1.0:policy-combining-algorithm:";

std::string combining_uri(std::string_view prefix, CombiningAlgorithm a) {
  return std::string(prefix) + std::string(to_string(a));
}

std::string child_path(const std::string& parent, const Element& el) {
  return parent + "/" + el.name;
}

class Reader {
 public:
  explicit Reader(std::string_view ns) : ns_(ns) {}

 protected:
  void check_namespace(const Element& el, const std::string& path) const {
    if (!el.ns.empty() && el.ns != ns_)
      throw UnsupportedFeature("element in namespace '" + el.ns +
                                   "' (expected '" + ns_ + "')",
                               path);
  }

  static std::string required(const Element& el, std::string_view attr,
                              const std::string& path) {
    auto v = el.attribute(attr);
    if (!v || v->empty())
      throw SchemaError("missing attribute " + std::string(attr) + " on " +
                        path);
    return std::string(*v);
  }

  static AttributeValue make_value(Category c, std::string id,
                                   std::string literal, std::string data_type,
                                   const std::string& path) {
    if (literal.empty()) throw SchemaError("empty AttributeValue at " + path);
    if (data_type.empty()) data_type = std::string(kStringDataType);
    return AttributeValue(c, std::move(id), std::move(literal),
                          std::move(data_type));
  }

  std::string ns_;
};

class PolicyReader : Reader {
 public:
  PolicyReader() : Reader(kPolicyNamespace) {}

  PolicySet read(const Element& root) {
    std::string path = "/" + root.name;
    check_namespace(root, path);
    if (root.name == "PolicySet") return read_policy_set(root, path);
    if (root.name == "Policy") {
      PolicySet ps;
      ps.policies.push_back(read_policy(root, path));
      ps.id = ps.policies.front().id;
      ps.implicit = true;
      return ps;
    }
    throw UnsupportedFeature("root element <" + root.name + ">", path);
  }

 private:
  PolicySet read_policy_set(const Element& el, const std::string& path) {
    PolicySet ps;
    ps.id = required(el, "PolicySetId", path);
    ps.policy_combining = read_combining(
        el, "PolicyCombiningAlgId", kPolicyCombiningPrefix, path);
    std::string here = path + "[" + ps.id + "]";
    bool seen_target = false;
    for (const auto& child : el.children) {
      std::string cp = child_path(here, child);
      check_namespace(child, cp);
      if (child.name == "Description") continue;
      if (child.name == "Target" && !seen_target) {
        ps.target = read_target(child, cp);
        seen_target = true;
      } else if (child.name == "Policy") {
        ps.policies.push_back(read_policy(child, cp));
      } else {
        throw UnsupportedFeature("<" + child.name + "> inside <PolicySet>", cp);
      }
    }
    return ps;
  }

  Policy read_policy(const Element& el, const std::string& path) {
    Policy p;
    p.id = required(el, "PolicyId", path);
    p.rule_combining =
        read_combining(el, "RuleCombiningAlgId", kRuleCombiningPrefix, path);
    std::string here = path + "[" + p.id + "]";
    bool seen_target = false;
    for (const auto& child : el.children) {
      std::string cp = child_path(here, child);
      check_namespace(child, cp);
      if (child.name == "Description") continue;
      if (child.name == "Target" && !seen_target) {
        p.target = read_target(child, cp);
        seen_target = true;
      } else if (child.name == "Rule") {
        p.rules.push_back(read_rule(child, cp));
      } else {
        throw UnsupportedFeature("<" + child.name + "> inside <Policy>", cp);
      }
    }
    return p;
  }

  Rule read_rule(const Element& el, const std::string& path) {
    Rule r;
    r.id = required(el, "RuleId", path);
    std::string effect = required(el, "Effect", path);
    auto e = effect_from_string(effect);
    if (!e) throw SchemaError("invalid Effect '" + effect + "' on " + path);
    r.effect = *e;
    std::string here = path + "[" + r.id + "]";
    for (const auto& child : el.children) {
      std::string cp = child_path(here, child);
      check_namespace(child, cp);
      if (child.name == "Description") continue;
      if (child.name == "Target") {
        r.target = read_target(child, cp);
      } else if (child.name == "Condition" && !r.condition) {
        r.condition = read_condition(child, cp);
      } else {
        throw UnsupportedFeature("<" + child.name + "> inside <Rule>", cp);
      }
    }
    return r;
  }

  static CombiningAlgorithm read_combining(const Element& el,
                                           std::string_view attr,
                                           std::string_view prefix,
                                           const std::string& path) {
    std::string uri = required(el, attr, path);
    if (uri.rfind(prefix, 0) == 0) {
      if (auto a = combining_from_string(std::string_view(uri).substr(prefix.size())))
        return *a;
    }
    throw UnsupportedFeature("combining algorithm '" + uri + "'", path);
  }

  TargetTuple read_target(const Element& el, const std::string& path) {
    TargetTuple t;
    for (const auto& group : el.children) {
      std::string gp = child_path(path, group);
      check_namespace(group, gp);
      const CategoryNames* names = nullptr;
      for (const auto& n : kNames)
        if (group.name == n.plural) names = &n;
      if (names == nullptr)
        throw UnsupportedFeature("<" + group.name + "> inside <Target>", gp);
      for (const auto& alt : group.children) {
        std::string ap = child_path(gp, alt);
        check_namespace(alt, ap);
        if (alt.name != names->single)
          throw UnsupportedFeature("<" + alt.name + "> inside <" +
                                       std::string(names->plural) + ">",
                                   ap);
        if (alt.children.size() != 1)
          throw UnsupportedFeature(
              "conjunctive target match (" +
                  std::to_string(alt.children.size()) + " matches in one <" +
                  std::string(names->single) + ">)",
              ap);
        t.insert(read_match(alt.children.front(), *names,
                            child_path(ap, alt.children.front())));
      }
    }
    return t;
  }

  AttributeValue read_match(const Element& el, const CategoryNames& names,
                            const std::string& path) {
    check_namespace(el, path);
    if (el.name != names.match)
      throw UnsupportedFeature("<" + el.name + "> where <" +
                                   std::string(names.match) + "> expected",
                               path);
    std::string fn = required(el, "MatchId", path);
    if (fn != functions::kStringEqual)
      throw UnsupportedFeature("match function '" + fn + "'", path);
    const Element* literal = nullptr;
    const Element* designator = nullptr;
    for (const auto& child : el.children) {
      std::string cp = child_path(path, child);
      check_namespace(child, cp);
      if (child.name == "AttributeValue" && literal == nullptr) {
        literal = &child;
      } else if (child.name == names.designator && designator == nullptr) {
        designator = &child;
      } else {
        throw UnsupportedFeature("<" + child.name + "> inside <" +
                                     std::string(names.match) + ">",
                                 cp);
      }
    }
    if (literal == nullptr || designator == nullptr)
      throw SchemaError(path + " needs an AttributeValue and a " +
                        std::string(names.designator));
    return make_value(names.category,
                      required(*designator, "AttributeId", path),
                      literal->trimmed_text(),
                      std::string(literal->attribute("DataType").value_or("")),
                      path);
  }

  Condition read_condition(const Element& el, const std::string& path) {
    // XACML 1.x style: the Condition element is itself the Apply.
    if (el.attribute("FunctionId")) return read_apply(el, path);
    const Element* expr = nullptr;
    for (const auto& child : el.children) {
      if (child.name == "Description") continue;
      if (expr != nullptr)
        throw SchemaError(path + " holds more than one expression");
      expr = &child;
    }
    if (expr == nullptr) throw SchemaError(path + " is empty");
    return read_expression(*expr, child_path(path, *expr));
  }

  Condition read_expression(const Element& el, const std::string& path) {
    check_namespace(el, path);
    if (el.name != "Apply")
      throw UnsupportedFeature("<" + el.name + "> as boolean expression", path);
    return read_apply(el, path);
  }

  Condition read_apply(const Element& el, const std::string& path) {
    std::string fn = required(el, "FunctionId", path);
    std::string here = path + "[" + fn + "]";
    if (fn == functions::kAnd || fn == functions::kOr) {
      std::vector<Condition> ops;
      for (const auto& child : el.children)
        ops.push_back(read_expression(child, child_path(here, child)));
      if (ops.empty()) throw SchemaError(here + " without arguments");
      return fn == functions::kAnd ? Condition::all_of(std::move(ops))
                                   : Condition::any_of(std::move(ops));
    }
    if (fn == functions::kNot) {
      if (el.children.size() != 1)
        throw SchemaError(here + " takes exactly one argument");
      return Condition::negate(read_expression(
          el.children.front(), child_path(here, el.children.front())));
    }
    if (fn == functions::kStringEqual || fn == functions::kStringIsIn)
      return read_comparison(el, here);
    throw UnsupportedFeature("function '" + fn + "'", path);
  }

  // string-equal(one-and-only(designator), value) in either argument order,
  // or string-is-in(value, designator).
  Condition read_comparison(const Element& el, const std::string& path) {
    if (el.children.size() != 2)
      throw SchemaError(path + " takes exactly two arguments");
    const Element* literal = nullptr;
    const Element* designator = nullptr;
    for (const auto& child : el.children) {
      std::string cp = child_path(path, child);
      check_namespace(child, cp);
      if (child.name == "AttributeValue" && literal == nullptr) {
        literal = &child;
      } else if (designator == nullptr && is_designator(child)) {
        designator = &child;
      } else if (designator == nullptr && child.name == "Apply") {
        std::string wrap = required(child, "FunctionId", cp);
        if (wrap != functions::kStringOneAndOnly)
          throw UnsupportedFeature("function '" + wrap + "'", cp);
        if (child.children.size() != 1 || !is_designator(child.children.front()))
          throw UnsupportedFeature(
              "one-and-only argument other than an attribute designator", cp);
        designator = &child.children.front();
      } else {
        throw UnsupportedFeature("<" + child.name + "> as comparison argument",
                                 cp);
      }
    }
    if (literal == nullptr || designator == nullptr)
      throw SchemaError(path +
                        " needs an AttributeValue and an attribute designator");
    Category c = designator_category(*designator);
    return Condition::predicate(make_value(
        c, required(*designator, "AttributeId", path), literal->trimmed_text(),
        std::string(literal->attribute("DataType").value_or("")), path));
  }

  static bool is_designator(const Element& el) {
    for (const auto& n : kNames)
      if (el.name == n.designator) return true;
    return false;
  }

  static Category designator_category(const Element& el) {
    for (const auto& n : kNames)
      if (el.name == n.designator) return n.category;
    throw std::logic_error("not a designator");
  }
};

class RequestReader : Reader {
 public:
  RequestReader() : Reader(kContextNamespace) {}

  RequestTuple read(const Element& root) {
    std::string path = "/" + root.name;
    check_namespace(root, path);
    if (root.name != "Request")
      throw UnsupportedFeature("root element <" + root.name + ">", path);
    RequestTuple req;
    for (const auto& section : root.children) {
      std::string sp = child_path(path, section);
      check_namespace(section, sp);
      const CategoryNames* names = nullptr;
      for (const auto& n : kNames)
        if (section.name == n.single) names = &n;
      if (names == nullptr)
        throw UnsupportedFeature("<" + section.name + "> inside <Request>", sp);
      for (const auto& attr : section.children) {
        std::string ap = child_path(sp, attr);
        check_namespace(attr, ap);
        if (attr.name != "Attribute")
          throw UnsupportedFeature("<" + attr.name + "> inside <" +
                                       section.name + ">",
                                   ap);
        read_attribute(attr, names->category, ap, req);
      }
    }
    return req;
  }

 private:
  void read_attribute(const Element& el, Category c, const std::string& path,
                      RequestTuple& req) {
    std::string id = required(el, "AttributeId", path);
    std::string data_type(el.attribute("DataType").value_or(""));
    bool any = false;
    for (const auto& child : el.children) {
      std::string cp = child_path(path, child);
      check_namespace(child, cp);
      if (child.name != "AttributeValue")
        throw UnsupportedFeature("<" + child.name + "> inside <Attribute>", cp);
      req.insert(make_value(c, id, child.trimmed_text(), data_type, cp));
      any = true;
    }
    if (!any) throw SchemaError(path + " has no AttributeValue");
  }
};

void emit_target(xml::Writer& w, const TargetTuple& t) {
  if (t.empty()) {
    w.empty("Target");
    return;
  }
  w.open("Target");
  for (Category c : kAllCategories) {
    if (t[c].empty()) continue;
    const auto& n = names_of(c);
    w.open(n.plural);
    for (const auto& v : t[c]) {
      w.open(n.single);
      w.open(n.match, {{"MatchId", functions::kStringEqual}});
      w.leaf("AttributeValue", {{"DataType", v.data_type()}}, v.value());
      w.empty(n.designator,
              {{"AttributeId", v.attribute_id()}, {"DataType", v.data_type()}});
      w.close();
      w.close();
    }
    w.close();
  }
  w.close();
}

void emit_condition(xml::Writer& w, const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::kAnd:
    case Condition::Kind::kOr:
    case Condition::Kind::kNot: {
      std::string_view fn = c.kind() == Condition::Kind::kAnd  ? functions::kAnd
                            : c.kind() == Condition::Kind::kOr ? functions::kOr
                                                               : functions::kNot;
      w.open("Apply", {{"FunctionId", fn}});
      for (const auto& op : c.operands()) emit_condition(w, op);
      w.close();
      return;
    }
    case Condition::Kind::kPredicate: {
      const auto& v = c.value();
      w.open("Apply", {{"FunctionId", functions::kStringEqual}});
      w.open("Apply", {{"FunctionId", functions::kStringOneAndOnly}});
      w.empty(names_of(v.category()).designator,
              {{"AttributeId", v.attribute_id()}, {"DataType", v.data_type()}});
      w.close();
      w.leaf("AttributeValue", {{"DataType", v.data_type()}}, v.value());
      w.close();
      return;
    }
  }
}

void emit_policy_body(xml::Writer& w, const Policy& p) {
  std::string alg = combining_uri(kRuleCombiningPrefix, p.rule_combining);
  w.open("Policy", {{"PolicyId", p.id}, {"RuleCombiningAlgId", alg}});
  emit_target(w, p.target);
  for (const auto& r : p.rules) {
    w.open("Rule", {{"RuleId", r.id}, {"Effect", to_string(r.effect)}});
    if (!r.target.empty()) emit_target(w, r.target);
    if (r.condition) {
      w.open("Condition");
      emit_condition(w, *r.condition);
      w.close();
    }
    w.close();
  }
  w.close();
}

}  // namespace

PolicySet parse_policy(std::string_view xml_text) {
  PolicySet ps = PolicyReader().read(xml::parse(xml_text));
  validate(ps);
  return ps;
}

PolicyDocument load_policy(const std::filesystem::path& path) {
  return PolicyDocument{parse_policy(read_text_file(path)), path.string()};
}

std::string emit_policy(const PolicySet& ps) {
  xml::Writer w(kPolicyNamespace);
  if (ps.implicit && ps.policies.size() == 1 && ps.target.empty() &&
      ps.id == ps.policies.front().id) {
    emit_policy_body(w, ps.policies.front());
    return std::move(w).str();
  }
  std::string alg = combining_uri(kPolicyCombiningPrefix, ps.policy_combining);
  w.open("PolicySet", {{"PolicySetId", ps.id}, {"PolicyCombiningAlgId", alg}});
  emit_target(w, ps.target);
  for (const auto& p : ps.policies) emit_policy_body(w, p);
  return std::move(w).str();
}

RequestTuple parse_request(std::string_view xml_text) {
  return RequestReader().read(xml::parse(xml_text));
}

RequestTuple load_request(const std::filesystem::path& path) {
  return parse_request(read_text_file(path));
}

std::string emit_request(const RequestTuple& req) {
  xml::Writer w(kContextNamespace);
  w.open("Request");
  for (Category c : kAllCategories) {
    const auto& name = names_of(c).single;
    if (req[c].empty()) {
      w.empty(name);
      continue;
    }
    w.open(name);
    for (const auto& v : req[c]) {
      w.open("Attribute",
             {{"AttributeId", v.attribute_id()}, {"DataType", v.data_type()}});
      w.leaf("AttributeValue", {}, v.value());
      w.close();
    }
    w.close();
  }
  return std::move(w).str();
}

Decision parse_response(std::string_view xml_text) {
  Element root = xml::parse(xml_text);
  if (root.name != "Response")
    throw UnsupportedFeature("root element <" + root.name + ">", "/" + root.name);
  const Element* result = nullptr;
  for (const auto& child : root.children) {
    if (child.name != "Result")
      throw UnsupportedFeature("<" + child.name + "> inside <Response>",
                               "/Response/" + child.name);
    if (result != nullptr)
      throw SchemaError("response carries more than one Result");
    result = &child;
  }
  if (result == nullptr) throw SchemaError("response without Result");
  for (const auto& child : result->children) {
    if (child.name != "Decision") continue;
    std::string text = child.trimmed_text();
    if (auto d = decision_from_string(text)) return *d;
    throw SchemaError("invalid Decision '" + text + "'");
  }
  throw SchemaError("Result without Decision");
}

std::string emit_response(Decision decision) {
  xml::Writer w(kContextNamespace);
  w.open("Response");
  w.open("Result");
  w.leaf("Decision", {}, to_string(decision));
  w.open("Status");
  w.empty("StatusCode", {{"Value", "urn:oasis:names:tc:xacml:1.0:status:ok"}});
  return std::move(w).str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace xacmlcov
