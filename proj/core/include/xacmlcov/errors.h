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

#ifndef XACMLCOV_ERRORS_H_
#define XACMLCOV_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xacmlcov {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text is not well-formed XML.
class XmlSyntaxError : public Error {
 public:
  XmlSyntaxError(const std::string& message, std::int64_t line)
      : Error("XML syntax error at line " + std::to_string(line) + ": " +
              message),
        line_(line) {}

  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

// Element, attribute value or function outside the supported XACML subset.
// `path` is the slash-separated element path of the offending node.
class UnsupportedFeature : public Error {
 public:
  UnsupportedFeature(const std::string& what, const std::string& path)
      : Error("unsupported feature at " + path + ": " + what), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A required attribute or child element is missing or has an invalid value.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class UnknownRule : public Error {
 public:
  using Error::Error;
};

// Condition that cannot be turned into trace literals.
class UnsupportedCondition : public Error {
 public:
  using Error::Error;
};

class EmptyPolicyValues : public Error {
 public:
  using Error::Error;
};

class SuiteTooLarge : public Error {
 public:
  SuiteTooLarge(const std::string& message, std::uint64_t cap)
      : Error(message), cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

class OrphanResponse : public Error {
 public:
  using Error::Error;
};

class DuplicateRequestId : public Error {
 public:
  using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON document or event line.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace xacmlcov

#endif  // XACMLCOV_ERRORS_H_
