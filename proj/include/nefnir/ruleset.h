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

// The runtime model: longest-suffix rule lookup, the exception table, and
// lemmatization on top of both. All types here are immutable once built and
// safe to share between threads.

#ifndef NEFNIR_RULESET_H_
#define NEFNIR_RULESET_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nefnir/rule.h"

namespace nefnir {

// Rules unique per (match_suffix, tag), indexed by a trie over the reversed
// bytes of each suffix, one root per tag.
class RuleSet {
 public:
  RuleSet();

  // Throws UsageError on a duplicate (match_suffix, tag) key or an invalid
  // rule.
  void add(Rule rule);

  // The matching rule with the longest suffix, or nullptr.
  const Rule *lookup(std::string_view form, std::string_view tag) const;

  const Rule *find(std::string_view match_suffix, std::string_view tag) const;

  // In insertion order.
  const std::vector<Rule> &rules() const { return rules_; }
  size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  // Sorted by (tag, reversed match_suffix, match_suffix).
  std::vector<Rule> sorted() const;

  // Same rules, regardless of insertion order.
  bool operator==(const RuleSet &other) const;

 private:
  static constexpr int32_t kNoRule = -1;

  uint32_t child(uint32_t node, unsigned char byte) const;
  uint32_t add_child(uint32_t node, unsigned char byte);
  std::optional<uint32_t> root(std::string_view tag) const;

  std::vector<Rule> rules_;
  std::unordered_map<std::string, uint32_t> roots_;
  std::vector<int32_t> node_rule_;
  std::unordered_map<uint64_t, uint32_t> edges_;
};

class ExceptionTable {
 public:
  // Throws UsageError on a duplicate (form, tag) key or an empty lemma.
  void add(std::string form, std::string tag, std::string lemma);

  const std::string *find(std::string_view form, std::string_view tag) const;

  size_t size() const { return lemmas_.size(); }
  bool empty() const { return lemmas_.empty(); }

  struct Item {
    std::string form;
    std::string tag;
    std::string lemma;
    bool operator==(const Item &) const = default;
  };
  // Sorted by (form, tag).
  std::vector<Item> sorted() const;

  bool operator==(const ExceptionTable &other) const {
    return lemmas_ == other.lemmas_;
  }

 private:
  std::unordered_map<std::string, std::string> lemmas_;  // "form\ttag"
};

struct Model {
  static constexpr int kFormatVersion = 1;

  RuleSet rules;
  ExceptionTable exceptions;
  // Content hash of the tag map used at training time; empty if none.
  std::string tagmap_hash;
  int format_version = kFormatVersion;

  bool operator==(const Model &) const = default;
};

enum class Provenance { kException, kRule, kIdentity };

const char *to_string(Provenance provenance);

struct LemmaResult {
  std::string lemma;
  Provenance provenance = Provenance::kIdentity;
  // Match suffix length in code points when provenance is kRule.
  size_t suffix_length = 0;
  // The lemma was found for the form with its first letter lowercased.
  bool case_folded = false;
};

struct LemmatizeOptions {
  // Retry with the first code point lowercased before falling back to
  // identity.
  bool case_fallback = false;
};

const Rule *lookup_rule(const RuleSet &rules, std::string_view form,
                        std::string_view tag);

// Exception table first, then the most specific rule, then the form itself.
LemmaResult lemmatize(const Model &model, std::string_view form,
                      std::string_view tag,
                      const LemmatizeOptions &options = {});

}  // namespace nefnir

#endif  // NEFNIR_RULESET_H_
