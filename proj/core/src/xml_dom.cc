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

#include "xml_dom.h"

#include <expat.h>

#include <climits>
#include <memory>

#include "xacmlcov/errors.h"

namespace xacmlcov::xml {
namespace {

constexpr char kNsSeparator = '|';

void split_name(const XML_Char* raw, std::string& ns, std::string& local) {
  std::string_view full(raw);
  auto pos = full.rfind(kNsSeparator);
  if (pos == std::string_view::npos) {
    ns.clear();
    local.assign(full);
  } else {
    ns.assign(full.substr(0, pos));
    local.assign(full.substr(pos + 1));
  }
}

struct BuildState {
  XML_Parser parser = nullptr;
  Element root;
  std::vector<Element*> open;
  bool has_root = false;
};

void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
  auto* st = static_cast<BuildState*>(user);
  Element* el;
  if (st->open.empty()) {
    st->has_root = true;
    el = &st->root;
  } else {
    st->open.back()->children.emplace_back();
    el = &st->open.back()->children.back();
  }
  split_name(name, el->ns, el->name);
  el->line = static_cast<std::int64_t>(XML_GetCurrentLineNumber(st->parser));
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    std::string ns, local;
    split_name(attrs[i], ns, local);
    el->attributes.emplace_back(std::move(local), attrs[i + 1]);
  }
  st->open.push_back(el);
}

void on_end(void* user, const XML_Char*) {
  static_cast<BuildState*>(user)->open.pop_back();
}

void on_text(void* user, const XML_Char* s, int len) {
  auto* st = static_cast<BuildState*>(user);
  if (!st->open.empty()) st->open.back()->text.append(s, static_cast<std::size_t>(len));
}

using ParserPtr = std::unique_ptr<std::remove_pointer_t<XML_Parser>,
                                  decltype(&XML_ParserFree)>;

bool is_xml_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

std::optional<std::string_view> Element::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes)
    if (k == key) return std::string_view(v);
  return std::nullopt;
}

std::string Element::trimmed_text() const {
  std::size_t b = 0, e = text.size();
  while (b < e && is_xml_space(text[b])) ++b;
  while (e > b && is_xml_space(text[e - 1])) --e;
  return text.substr(b, e - b);
}

Element parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(INT_MAX))
    throw XmlSyntaxError("document too large", 0);
  ParserPtr parser(XML_ParserCreateNS("UTF-8", kNsSeparator), &XML_ParserFree);
  if (!parser) throw XmlSyntaxError("cannot allocate parser", 0);
  BuildState st;
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), &on_start, &on_end);
  XML_SetCharacterDataHandler(parser.get(), &on_text);
  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()),
                XML_TRUE) == XML_STATUS_ERROR) {
    throw XmlSyntaxError(XML_ErrorString(XML_GetErrorCode(parser.get())),
                         static_cast<std::int64_t>(
                             XML_GetCurrentLineNumber(parser.get())));
  }
  if (!st.has_root) throw XmlSyntaxError("no root element", 0);
  return std::move(st.root);
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

Writer::Writer(std::string_view default_ns) : default_ns_(default_ns) {
  out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
}

void Writer::indent() { out_.append(2 * stack_.size(), ' '); }

void Writer::start_tag(
    std::string_view name,
    std::initializer_list<std::pair<std::string_view, std::string_view>> attributes) {
  indent();
  out_ += '<';
  out_ += name;
  if (stack_.empty() && !default_ns_.empty()) {
    out_ += " xmlns=\"";
    out_ += escape(default_ns_);
    out_ += '"';
  }
  for (const auto& [k, v] : attributes) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += escape(v);
    out_ += '"';
  }
}

Writer& Writer::open(
    std::string_view name,
    std::initializer_list<std::pair<std::string_view, std::string_view>> attributes) {
  start_tag(name, attributes);
  out_ += ">\n";
  stack_.emplace_back(name);
  return *this;
}

Writer& Writer::leaf(
    std::string_view name,
    std::initializer_list<std::pair<std::string_view, std::string_view>> attributes,
    std::string_view text) {
  start_tag(name, attributes);
  out_ += '>';
  out_ += escape(text);
  out_ += "</";
  out_ += name;
  out_ += ">\n";
  return *this;
}

Writer& Writer::empty(
    std::string_view name,
    std::initializer_list<std::pair<std::string_view, std::string_view>> attributes) {
  start_tag(name, attributes);
  out_ += "/>\n";
  return *this;
}

Writer& Writer::close() {
  std::string name = std::move(stack_.back());
  stack_.pop_back();
  indent();
  out_ += "</";
  out_ += name;
  out_ += ">\n";
  return *this;
}

std::string Writer::str() && {
  while (!stack_.empty()) close();
  return std::move(out_);
}

}  // namespace xacmlcov::xml
