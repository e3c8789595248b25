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

#include "fixtures.h"

#include "xacmlcov/xacml_io.h"

namespace xacmlcov::testing {

std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(XACMLCOV_FIXTURE_DIR) / name;
}

PolicySet fixture_policy(int n) {
  return load_policy(fixture_path("policy" + std::to_string(n) + ".xml")).root;
}

std::string read_fixture(const std::string& name) {
  return read_text_file(fixture_path(name));
}

}  // namespace xacmlcov::testing
