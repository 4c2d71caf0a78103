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

#include "nefnir/ruleset.h"

#include <algorithm>
#include <tuple>

#include "nefnir/error.h"
#include "nefnir/utf8.h"

namespace nefnir {
namespace {

std::string table_key(std::string_view form, std::string_view tag) {
  std::string key;
  key.reserve(form.size() + tag.size() + 1);
  key.append(form);
  key.push_back('\t');
  key.append(tag);
  return key;
}

uint64_t edge_key(uint32_t node, unsigned char byte) {
  return (static_cast<uint64_t>(node) << 8) | byte;
}

std::optional<LemmaResult> lookup(const Model &model, std::string_view form,
                                  std::string_view tag) {
  if (const std::string *lemma = model.exceptions.find(form, tag)) {
    return LemmaResult{*lemma, Provenance::kException, 0, false};
  }
  if (const Rule *rule = model.rules.lookup(form, tag)) {
    return LemmaResult{apply_rule(*rule, form), Provenance::kRule,
                       utf8::length(rule->match_suffix), false};
  }
  return std::nullopt;
}

}  // namespace

RuleSet::RuleSet() = default;

std::optional<uint32_t> RuleSet::root(std::string_view tag) const {
  auto found = roots_.find(std::string(tag));
  if (found == roots_.end()) return std::nullopt;
  return found->second;
}

uint32_t RuleSet::child(uint32_t node, unsigned char byte) const {
  auto found = edges_.find(edge_key(node, byte));
  return found == edges_.end() ? 0 : found->second;
}

uint32_t RuleSet::add_child(uint32_t node, unsigned char byte) {
  auto [it, inserted] = edges_.try_emplace(edge_key(node, byte), 0);
  if (inserted) {
    it->second = static_cast<uint32_t>(node_rule_.size());
    node_rule_.push_back(kNoRule);
  }
  return it->second;
}

void RuleSet::add(Rule rule) {
  validate_rule(rule);
  if (rule.tag.empty()) throw UsageError("rule with empty tag");
  auto [root_it, new_tag] = roots_.try_emplace(rule.tag, 0);
  if (new_tag) {
    // Node ids start at 1 so that 0 can mean "no child".
    if (node_rule_.empty()) node_rule_.push_back(kNoRule);
    root_it->second = static_cast<uint32_t>(node_rule_.size());
    node_rule_.push_back(kNoRule);
  }
  uint32_t node = root_it->second;
  const std::string &suffix = rule.match_suffix;
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
    node = add_child(node, static_cast<unsigned char>(*it));
  }
  if (node_rule_[node] != kNoRule) {
    throw UsageError("duplicate rule key (" + rule.match_suffix + ", " +
                     rule.tag + ")");
  }
  node_rule_[node] = static_cast<int32_t>(rules_.size());
  rules_.push_back(std::move(rule));
}

const Rule *RuleSet::lookup(std::string_view form, std::string_view tag) const {
  const auto start = root(tag);
  if (!start) return nullptr;
  uint32_t node = *start;
  int32_t best = node_rule_[node];
  for (auto it = form.rbegin(); it != form.rend(); ++it) {
    node = child(node, static_cast<unsigned char>(*it));
    if (node == 0) break;
    if (node_rule_[node] != kNoRule) best = node_rule_[node];
  }
  return best == kNoRule ? nullptr : &rules_[best];
}

const Rule *RuleSet::find(std::string_view match_suffix,
                          std::string_view tag) const {
  const auto start = root(tag);
  if (!start) return nullptr;
  uint32_t node = *start;
  for (auto it = match_suffix.rbegin(); it != match_suffix.rend(); ++it) {
    node = child(node, static_cast<unsigned char>(*it));
    if (node == 0) return nullptr;
  }
  return node_rule_[node] == kNoRule ? nullptr : &rules_[node_rule_[node]];
}

std::vector<Rule> RuleSet::sorted() const {
  std::vector<std::pair<std::u32string, const Rule *>> keyed;
  keyed.reserve(rules_.size());
  for (const Rule &rule : rules_) {
    std::u32string reversed = utf8::decode(rule.match_suffix);
    std::reverse(reversed.begin(), reversed.end());
    keyed.emplace_back(std::move(reversed), &rule);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
    return std::tie(a.second->tag, a.first, a.second->match_suffix) <
           std::tie(b.second->tag, b.first, b.second->match_suffix);
  });
  std::vector<Rule> result;
  result.reserve(keyed.size());
  for (const auto &[reversed, rule] : keyed) result.push_back(*rule);
  return result;
}

bool RuleSet::operator==(const RuleSet &other) const {
  return rules_.size() == other.rules_.size() && sorted() == other.sorted();
}

void ExceptionTable::add(std::string form, std::string tag, std::string lemma) {
  if (lemma.empty()) throw UsageError("empty lemma for '" + form + "'");
  auto [it, inserted] =
      lemmas_.try_emplace(table_key(form, tag), std::move(lemma));
  if (!inserted) {
    throw UsageError("duplicate exception key (" + form + ", " + tag + ")");
  }
}

const std::string *ExceptionTable::find(std::string_view form,
                                        std::string_view tag) const {
  if (lemmas_.empty()) return nullptr;
  auto found = lemmas_.find(table_key(form, tag));
  return found == lemmas_.end() ? nullptr : &found->second;
}

std::vector<ExceptionTable::Item> ExceptionTable::sorted() const {
  std::vector<Item> items;
  items.reserve(lemmas_.size());
  for (const auto &[key, lemma] : lemmas_) {
    const size_t tab = key.rfind('\t');
    items.push_back({key.substr(0, tab), key.substr(tab + 1), lemma});
  }
  std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) {
    return std::tie(a.form, a.tag) < std::tie(b.form, b.tag);
  });
  return items;
}

const char *to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kException:
      return "exception";
    case Provenance::kRule:
      return "rule";
    case Provenance::kIdentity:
      return "identity";
  }
  return "unknown";
}

const Rule *lookup_rule(const RuleSet &rules, std::string_view form,
                        std::string_view tag) {
  return rules.lookup(form, tag);
}

LemmaResult lemmatize(const Model &model, std::string_view form,
                      std::string_view tag, const LemmatizeOptions &options) {
  if (auto result = lookup(model, form, tag)) return *std::move(result);
  if (options.case_fallback) {
    const std::string lowered = utf8::lower_first(form);
    if (lowered != form) {
      if (auto result = lookup(model, lowered, tag)) {
        result->case_folded = true;
        return *std::move(result);
      }
    }
  }
  return LemmaResult{std::string(form), Provenance::kIdentity, 0, false};
}

}  // namespace nefnir
