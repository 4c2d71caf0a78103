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

#ifndef NEFNIR_RULE_H_
#define NEFNIR_RULE_H_

#include <compare>
#include <string>
#include <string_view>

namespace nefnir {

// Suffix rewrite: drop `source` from the end of a word, append `replacement`.
struct Transform {
  std::string source;
  std::string replacement;

  bool is_identity() const { return source.empty() && replacement.empty(); }

  auto operator<=>(const Transform &) const = default;
};

// (match_suffix, tag, transform): applies to words with the given tag ending
// in match_suffix. transform.source is always a suffix of match_suffix.
struct Rule {
  std::string match_suffix;
  std::string tag;
  Transform transform;

  auto operator<=>(const Rule &) const = default;
};

// The transform left after stripping the longest common prefix of form and
// lemma: (bækur, bók) -> ækur→ók.
Transform minimal_transform(std::string_view form, std::string_view lemma);

// Checks the rule invariant; throws UsageError if transform.source is not a
// suffix of match_suffix.
void validate_rule(const Rule &rule);

// Rewrites form with rule.transform. Throws UsageError unless form ends with
// rule.match_suffix.
std::string apply_rule(const Rule &rule, std::string_view form);

std::string to_string(const Transform &transform);
std::string to_string(const Rule &rule);

}  // namespace nefnir

#endif  // NEFNIR_RULE_H_
