// Copyright 2026 The Nefnir Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nefnir/rule.h"

#include "nefnir/error.h"
#include "nefnir/utf8.h"

namespace nefnir {
namespace {

std::string show(std::string_view text) {
  return text.empty() ? std::string("ε") : std::string(text);
}

}  // namespace

Transform minimal_transform(std::string_view form, std::string_view lemma) {
  const size_t prefix = utf8::common_prefix_bytes(form, lemma);
  return Transform{std::string(form.substr(prefix)),
                   std::string(lemma.substr(prefix))};
}

void validate_rule(const Rule &rule) {
  if (!rule.match_suffix.ends_with(rule.transform.source)) {
    throw UsageError("transform source '" + rule.transform.source +
                     "' is not a suffix of '" + rule.match_suffix + "'");
  }
}

std::string apply_rule(const Rule &rule, std::string_view form) {
  validate_rule(rule);
  if (!form.ends_with(rule.match_suffix)) {
    throw UsageError("rule " + to_string(rule) + " does not match '" +
                     std::string(form) + "'");
  }
  std::string result(
      form.substr(0, form.size() - rule.transform.source.size()));
  result += rule.transform.replacement;
  return result;
}

std::string to_string(const Transform &transform) {
  return show(transform.source) + "→" + show(transform.replacement);
}

std::string to_string(const Rule &rule) {
  return "(" + show(rule.match_suffix) + ", " + rule.tag + ", " +
         to_string(rule.transform) + ")";
}

}  // namespace nefnir
