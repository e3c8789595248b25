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

// Reading and writing the XACML 2.0 subset understood by the toolkit.
//
// Policies: PolicySet > Policy > Rule with Subjects/Resources/Actions/
// Environments targets whose matches all use string-equal, one match per
// Subject/Resource/Action/Environment element (alternatives of one dimension
// are OR-ed). Conditions are Apply trees over and/or/not, string-equal and
// string-is-in, with *-one-and-only wrappers around attribute designators.
// Anything else raises UnsupportedFeature naming the element path.
//
// Requests and responses use the XACML 2.0 context schema.

#ifndef XACMLCOV_XACML_IO_H_
#define XACMLCOV_XACML_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "xacmlcov/model.h"

namespace xacmlcov {

inline constexpr std::string_view kPolicyNamespace =
    "urn:oasis:names:tc:xacml:2.0:policy:schema:os";
inline constexpr std::string_view kContextNamespace =
    "urn:oasis:names:tc:xacml:2.0:context:schema:os";

namespace functions {
inline constexpr std::string_view kStringEqual =
    "urn:oasis:names:tc:xacml:1.0:function:string-equal";
inline constexpr std::string_view kStringIsIn =
    "urn:oasis:names:tc:xacml:1.0:function:string-is-in";
inline constexpr std::string_view kStringOneAndOnly =
    "urn:oasis:names:tc:xacml:1.0:function:string-one-and-only";
inline constexpr std::string_view kAnd =
    "urn:oasis:names:tc:xacml:1.0:function:and";
inline constexpr std::string_view kOr =
    "urn:oasis:names:tc:xacml:1.0:function:or";
inline constexpr std::string_view kNot =
    "urn:oasis:names:tc:xacml:1.0:function:not";
}  // namespace functions

// Standard attribute ids used by the bundled fixtures and generators.
namespace attributes {
inline constexpr std::string_view kSubjectId =
    "urn:oasis:names:tc:xacml:1.0:subject:subject-id";
inline constexpr std::string_view kRole =
    "urn:oasis:names:tc:xacml:2.0:subject:role";
inline constexpr std::string_view kResourceId =
    "urn:oasis:names:tc:xacml:1.0:resource:resource-id";
inline constexpr std::string_view kActionId =
    "urn:oasis:names:tc:xacml:1.0:action:action-id";
}  // namespace attributes

struct PolicyDocument {
  PolicySet root;
  std::string source_uri;
};

// A bare <Policy> root is wrapped in an implicit PolicySet with an empty
// target and first-applicable combining.
// Throws XmlSyntaxError, UnsupportedFeature or SchemaError.
PolicySet parse_policy(std::string_view xml_text);
PolicyDocument load_policy(const std::filesystem::path& path);

// parse_policy(emit_policy(ps)) == ps.
std::string emit_policy(const PolicySet& ps);

RequestTuple parse_request(std::string_view xml_text);
RequestTuple load_request(const std::filesystem::path& path);
std::string emit_request(const RequestTuple& req);

Decision parse_response(std::string_view xml_text);
std::string emit_response(Decision decision);

// Throws IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace xacmlcov

#endif  // XACMLCOV_XACML_IO_H_
