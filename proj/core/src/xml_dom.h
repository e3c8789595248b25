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

// Minimal element tree on top of expat, and a matching pretty printer.
// Internal to the library.

#ifndef XACMLCOV_SRC_XML_DOM_H_
#define XACMLCOV_SRC_XML_DOM_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xacmlcov::xml {

struct Element {
  std::string ns;    // namespace URI, empty if unqualified
  std::string name;  // local name
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;  // concatenated character data of this element only
  std::int64_t line = 0;

  std::optional<std::string_view> attribute(std::string_view key) const;
  // Text with surrounding XML whitespace removed.
  std::string trimmed_text() const;
};

// Throws XmlSyntaxError.
Element parse(std::string_view text);

class Writer {
 public:
  explicit Writer(std::string_view default_ns);

  Writer& open(std::string_view name,
               std::initializer_list<std::pair<std::string_view, std::string_view>>
                   attributes = {});
  // Element with text content and no children.
  Writer& leaf(std::string_view name,
               std::initializer_list<std::pair<std::string_view, std::string_view>>
                   attributes,
               std::string_view text);
  // Self-closing element.
  Writer& empty(std::string_view name,
                std::initializer_list<std::pair<std::string_view, std::string_view>>
                    attributes = {});
  Writer& close();

  std::string str() &&;

 private:
  void start_tag(std::string_view name,
                 std::initializer_list<std::pair<std::string_view, std::string_view>>
                     attributes);
  void indent();

  std::string out_;
  std::string default_ns_;
  std::vector<std::string> stack_;
};

std::string escape(std::string_view text);

}  // namespace xacmlcov::xml

#endif  // XACMLCOV_SRC_XML_DOM_H_
