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

#include "nefnir/trainer.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "nefnir/error.h"
#include "nefnir/utf8.h"

namespace nefnir {
namespace {

// Lookup key for a (tag id, suffix) pair.
std::string key_string(uint32_t tag, std::string_view suffix) {
  std::string key(sizeof(tag) + suffix.size(), '\0');
  std::memcpy(key.data(), &tag, sizeof(tag));
  std::memcpy(key.data() + sizeof(tag), suffix.data(), suffix.size());
  return key;
}

uint64_t candidate_key(uint32_t key, uint32_t transform) {
  return (static_cast<uint64_t>(key) << 32) | transform;
}

}  // namespace

std::vector<size_t> candidate_suffix_lengths(const LexiconEntry &entry,
                                             const Transform &transform) {
  const size_t length = utf8::length(entry.form);
  const size_t lower = utf8::length(transform.source);
  std::vector<size_t> lengths;
  if (lower > length) return lengths;
  if (!entry.is_compound()) {
    for (size_t n = lower; n <= length; ++n) lengths.push_back(n);
    return lengths;
  }
  const auto &boundaries = entry.part_boundaries;
  const size_t final_part = length - boundaries.back();
  for (size_t n = lower; n <= final_part; ++n) lengths.push_back(n);
  for (size_t i = boundaries.size() - 1; i-- > 0;) {
    const size_t n = length - boundaries[i];
    if (n >= lower) lengths.push_back(n);
  }
  lengths.push_back(length);
  return lengths;
}

std::vector<std::string> candidate_suffixes(const LexiconEntry &entry,
                                            const Transform &transform) {
  std::vector<std::string> suffixes;
  for (size_t n : candidate_suffix_lengths(entry, transform)) {
    suffixes.emplace_back(utf8::suffix(entry.form, n));
  }
  return suffixes;
}

Trainer::Trainer(const TrainingSet &set, TrainConfig config)
    : config_(std::move(config)), source_(set.entries()) {
  if (config_.min_support == 0) throw UsageError("min_support must be >= 1");
  build();
  max_iterations_ = config_.max_iterations.value_or(errors_);
  error_history_.push_back(errors_);
}

void Trainer::build() {
  // Tag and transform ids follow lexicographic order, so comparing ids
  // compares strings.
  std::map<std::string, uint32_t> tag_ids;
  std::map<Transform, uint32_t> transform_ids;
  std::vector<Transform> entry_transforms;
  entry_transforms.reserve(source_.size());
  for (const LexiconEntry &e : source_) {
    tag_ids.emplace(e.tag, 0);
    entry_transforms.push_back(minimal_transform(e.form, e.lemma));
    transform_ids.emplace(entry_transforms.back(), 0);
  }
  for (auto &[tag, id] : tag_ids) {
    id = static_cast<uint32_t>(tags_.size());
    tags_.push_back(tag);
  }
  for (auto &[transform, id] : transform_ids) {
    id = static_cast<uint32_t>(transforms_.size());
    transforms_.push_back(transform);
  }

  entries_.resize(source_.size());
  {
    std::unordered_map<std::string, uint32_t> seen;
    for (size_t i = 0; i < source_.size(); ++i) {
      EntryState &state = entries_[i];
      state.tag = tag_ids.at(source_[i].tag);
      state.transform = transform_ids.at(entry_transforms[i]);
      state.correct = entry_transforms[i].is_identity();
      if (!state.correct) ++errors_;
      if (!seen.emplace(key_string(state.tag, source_[i].form), 0).second) {
        throw UsageError("duplicate training entry (" + source_[i].form + ", " +
                         source_[i].tag + ")");
      }
    }
  }

  // Candidate universe: everything any entry generates. Entries that are
  // correct now may be broken later and then generate candidates too.
  std::unordered_map<std::string, uint32_t> key_index;
  std::unordered_map<uint64_t, uint32_t> candidate_index;
  std::vector<size_t> raw_offsets{0};
  std::vector<uint32_t> raw_generated;
  for (size_t i = 0; i < source_.size(); ++i) {
    const LexiconEntry &e = source_[i];
    const EntryState &state = entries_[i];
    const std::vector<size_t> offsets = utf8::offsets(e.form);
    const size_t length = offsets.size() - 1;
    for (size_t n : candidate_suffix_lengths(e, entry_transforms[i])) {
      const std::string_view suffix =
          std::string_view(e.form).substr(offsets[length - n]);
      auto [key_it, new_key] =
          key_index.try_emplace(key_string(state.tag, suffix), 0);
      if (new_key) {
        key_it->second = static_cast<uint32_t>(keys_.size());
        Key &key = keys_.emplace_back();
        key.tag = state.tag;
        key.length = static_cast<uint32_t>(n);
        key.suffix = suffix;
      }
      auto [cand_it, new_candidate] = candidate_index.try_emplace(
          candidate_key(key_it->second, state.transform), 0);
      if (new_candidate) {
        cand_it->second = static_cast<uint32_t>(candidates_.size());
        Candidate &c = candidates_.emplace_back();
        c.key = key_it->second;
        c.transform = state.transform;
      }
      raw_generated.push_back(cand_it->second);
    }
    raw_offsets.push_back(raw_generated.size());
  }

  // Every key matching each entry's form, with support counts.
  std::vector<size_t> raw_key_offsets{0};
  std::vector<KeyRef> raw_keys;
  for (size_t i = 0; i < source_.size(); ++i) {
    const LexiconEntry &e = source_[i];
    const EntryState &state = entries_[i];
    const std::vector<size_t> offsets = utf8::offsets(e.form);
    const size_t length = offsets.size() - 1;
    for (size_t n = 0; n <= length; ++n) {
      const std::string_view suffix =
          std::string_view(e.form).substr(offsets[length - n]);
      auto key_it = key_index.find(key_string(state.tag, suffix));
      if (key_it == key_index.end()) continue;
      KeyRef ref{key_it->second, -1};
      auto cand_it =
          candidate_index.find(candidate_key(ref.key, state.transform));
      if (cand_it != candidate_index.end()) {
        ref.candidate = cand_it->second;
        ++candidates_[cand_it->second].support;
      }
      raw_keys.push_back(ref);
    }
    raw_key_offsets.push_back(raw_keys.size());
  }

  // Candidates below the support threshold can never be accepted; keys
  // without a surviving candidate need no bookkeeping.
  std::vector<bool> key_alive(keys_.size(), false);
  for (Candidate &c : candidates_) {
    c.alive = c.support >= static_cast<int64_t>(config_.min_support);
    if (c.alive) key_alive[c.key] = true;
  }

  key_offsets_.assign(1, 0);
  for (size_t i = 0; i < source_.size(); ++i) {
    for (size_t j = raw_key_offsets[i]; j < raw_key_offsets[i + 1]; ++j) {
      KeyRef ref = raw_keys[j];
      if (!key_alive[ref.key]) continue;
      if (ref.candidate >= 0 && !candidates_[ref.candidate].alive) {
        ref.candidate = -1;
      }
      keys_[ref.key].entries.push_back(static_cast<uint32_t>(i));
      if (entries_[i].correct) --keys_[ref.key].base;
      entry_keys_.push_back(ref);
    }
    key_offsets_.push_back(entry_keys_.size());
  }
  generated_offsets_.assign(1, 0);
  for (size_t i = 0; i < source_.size(); ++i) {
    for (size_t j = raw_offsets[i]; j < raw_offsets[i + 1]; ++j) {
      const uint32_t id = raw_generated[j];
      if (!candidates_[id].alive) continue;
      generated_.push_back(id);
      if (!entries_[i].correct) ++candidates_[id].generators;
    }
    generated_offsets_.push_back(generated_.size());
  }

  // Tie-break order of keys: (tag, suffix) lexicographically.
  key_order_.resize(keys_.size());
  {
    std::vector<uint32_t> by_order(keys_.size());
    for (uint32_t k = 0; k < keys_.size(); ++k) by_order[k] = k;
    std::sort(by_order.begin(), by_order.end(), [&](uint32_t a, uint32_t b) {
      return std::tie(keys_[a].tag, keys_[a].suffix) <
             std::tie(keys_[b].tag, keys_[b].suffix);
    });
    for (uint32_t rank = 0; rank < by_order.size(); ++rank) {
      key_order_[by_order[rank]] = rank;
    }
    order_to_key_ = std::move(by_order);
  }

  for (uint32_t id = 0; id < candidates_.size(); ++id) {
    Candidate &c = candidates_[id];
    if (!c.alive) continue;
    // Nothing has been accepted, so every matching entry is taken over.
    c.own = c.support;
    if (eligible(c)) keys_[c.key].ranked.insert(local_rank(id));
  }
  for (uint32_t k = 0; k < keys_.size(); ++k) {
    if (key_alive[k]) refresh(k);
  }
}

bool Trainer::eligible(const Candidate &c) const {
  return c.alive && c.generators > 0 && !keys_[c.key].accepted;
}

Trainer::LocalRank Trainer::local_rank(uint32_t id) const {
  const Candidate &c = candidates_[id];
  return {-c.own, -c.support, c.transform, id};
}

void Trainer::set_own(uint32_t id, int64_t own) {
  Candidate &c = candidates_[id];
  if (c.own == own) return;
  if (eligible(c)) {
    Key &key = keys_[c.key];
    key.ranked.erase(local_rank(id));
    c.own = own;
    key.ranked.insert(local_rank(id));
    mark_dirty(c.key);
  } else {
    c.own = own;
  }
}

void Trainer::set_generators(uint32_t id, int64_t generators) {
  Candidate &c = candidates_[id];
  const bool was = eligible(c);
  c.generators = generators;
  const bool now = eligible(c);
  if (was == now) return;
  if (now) {
    keys_[c.key].ranked.insert(local_rank(id));
  } else {
    keys_[c.key].ranked.erase(local_rank(id));
  }
  mark_dirty(c.key);
}

void Trainer::mark_dirty(uint32_t key) {
  if (keys_[key].dirty) return;
  keys_[key].dirty = true;
  dirty_.push_back(key);
}

void Trainer::refresh(uint32_t k) {
  Key &key = keys_[k];
  key.dirty = false;
  if (key.queued) {
    queue_.erase(*key.queued);
    key.queued.reset();
  }
  if (key.accepted || key.ranked.empty()) return;
  const auto &[negative_own, negative_support, transform, id] =
      *key.ranked.begin();
  const int64_t gain = key.base - negative_own;
  if (gain <= 0) return;
  key.queued =
      GlobalRank{-gain, negative_support, key.length, key_order_[k], transform};
  queue_.insert(*key.queued);
}

Rule Trainer::make_rule(uint32_t id) const {
  const Candidate &c = candidates_[id];
  const Key &key = keys_[c.key];
  return Rule{key.suffix, tags_[key.tag], transforms_[c.transform]};
}

void Trainer::apply(uint32_t id) {
  const Candidate &winner = candidates_[id];
  const uint32_t winner_key = winner.key;
  const uint32_t winner_transform = winner.transform;
  Key &key = keys_[winner_key];
  key.accepted = true;
  if (key.queued) {
    queue_.erase(*key.queued);
    key.queued.reset();
  }
  key.ranked.clear();

  const int32_t rule_index = static_cast<int32_t>(accepted_.size());
  accepted_.push_back(make_rule(id));
  const uint32_t length = key.length;

  for (uint32_t e : key.entries) {
    EntryState &state = entries_[e];
    if (state.specificity >= static_cast<int32_t>(length)) continue;
    const int32_t old_specificity = state.specificity;
    const bool was_correct = state.correct;
    const bool now_correct = state.transform == winner_transform;

    for (size_t j = key_offsets_[e]; j < key_offsets_[e + 1]; ++j) {
      const KeyRef &ref = entry_keys_[j];
      Key &other = keys_[ref.key];
      if (static_cast<int32_t>(other.length) <= old_specificity) continue;
      if (other.accepted) continue;
      const bool still_active = other.length > length;
      const int64_t delta =
          (was_correct ? 1 : 0) - (still_active && now_correct ? 1 : 0);
      if (delta != 0) {
        other.base += delta;
        mark_dirty(ref.key);
      }
      if (ref.candidate >= 0 && !still_active) {
        set_own(static_cast<uint32_t>(ref.candidate),
                candidates_[ref.candidate].own - 1);
      }
    }

    state.specificity = static_cast<int32_t>(length);
    state.producer = rule_index;
    state.correct = now_correct;
    if (was_correct != now_correct) {
      errors_ += now_correct ? -1 : 1;
      const int64_t step = now_correct ? -1 : 1;
      for (size_t j = generated_offsets_[e]; j < generated_offsets_[e + 1];
           ++j) {
        const uint32_t c = generated_[j];
        set_generators(c, candidates_[c].generators + step);
      }
    }
  }

  for (uint32_t k : dirty_) refresh(k);
  dirty_.clear();
}

std::optional<Rule> Trainer::step() {
  if (queue_.empty()) return std::nullopt;
  if (accepted_.size() >= max_iterations_) {
    throw TrainingError("training exceeded " + std::to_string(max_iterations_) +
                        " iterations with " + std::to_string(errors_) +
                        " errors remaining");
  }
  const GlobalRank top = *queue_.begin();
  const int64_t gain = -std::get<0>(top);
  const uint32_t k = order_to_key_[std::get<3>(top)];
  const uint32_t id = std::get<3>(*keys_[k].ranked.begin());
  if (candidates_[id].support < static_cast<int64_t>(config_.min_support)) {
    throw std::logic_error("accepted rule below support threshold");
  }
  const size_t before = errors_;
  apply(id);
  if (static_cast<int64_t>(before) - static_cast<int64_t>(errors_) != gain) {
    throw std::logic_error("error count did not drop by the predicted gain");
  }
  error_history_.push_back(errors_);
  return accepted_.back();
}

void Trainer::run() {
  while (step()) {
  }
}

std::string Trainer::prediction(size_t i) const {
  const EntryState &state = entries_[i];
  if (state.producer < 0) return source_[i].form;
  return apply_rule(accepted_[state.producer], source_[i].form);
}

std::vector<CandidateScore> Trainer::candidates() const {
  std::vector<std::pair<GlobalRank, uint32_t>> ranked;
  for (uint32_t id = 0; id < candidates_.size(); ++id) {
    const Candidate &c = candidates_[id];
    if (!eligible(c)) continue;
    const Key &key = keys_[c.key];
    ranked.push_back({GlobalRank{-(key.base + c.own), -c.support, key.length,
                                 key_order_[c.key], c.transform},
                      id});
  }
  std::sort(ranked.begin(), ranked.end());
  std::vector<CandidateScore> result;
  result.reserve(ranked.size());
  for (const auto &[rank, id] : ranked) {
    result.push_back({make_rule(id),
                      static_cast<size_t>(candidates_[id].support),
                      -std::get<0>(rank)});
  }
  return result;
}

int64_t Trainer::score(const Rule &rule) const {
  const int32_t length = static_cast<int32_t>(utf8::length(rule.match_suffix));
  int64_t gain = 0;
  for (size_t i = 0; i < source_.size(); ++i) {
    const LexiconEntry &e = source_[i];
    if (e.tag != rule.tag || !e.form.ends_with(rule.match_suffix)) continue;
    if (entries_[i].specificity >= length) continue;
    const bool fixed = apply_rule(rule, e.form) == e.lemma;
    gain +=
        static_cast<int64_t>(fixed) - static_cast<int64_t>(entries_[i].correct);
  }
  return gain;
}

ExceptionTable Trainer::build_exception_table() const {
  ExceptionTable table;
  for (size_t i = 0; i < source_.size(); ++i) {
    if (!entries_[i].correct) {
      table.add(source_[i].form, source_[i].tag, source_[i].lemma);
    }
  }
  return table;
}

Model Trainer::model() const {
  Model model;
  for (const Rule &rule : accepted_) model.rules.add(rule);
  model.exceptions = build_exception_table();
  return model;
}

void Trainer::check_consistency() const {
  size_t errors = 0;
  for (size_t i = 0; i < source_.size(); ++i) {
    const bool correct = prediction(i) == source_[i].lemma;
    if (correct != entries_[i].correct) {
      throw std::logic_error("stale correctness for '" + source_[i].form + "'");
    }
    if (!correct) ++errors;
  }
  if (errors != errors_) throw std::logic_error("stale error count");

  std::vector<int64_t> generators(candidates_.size(), 0);
  for (size_t i = 0; i < source_.size(); ++i) {
    if (entries_[i].correct) continue;
    for (size_t j = generated_offsets_[i]; j < generated_offsets_[i + 1]; ++j) {
      ++generators[generated_[j]];
    }
  }
  for (uint32_t id = 0; id < candidates_.size(); ++id) {
    const Candidate &c = candidates_[id];
    if (!c.alive) continue;
    const Key &key = keys_[c.key];
    if (key.accepted) continue;
    if (c.generators != generators[id]) {
      throw std::logic_error("stale generator count");
    }
    if (score(make_rule(id)) != key.base + c.own) {
      throw std::logic_error("stale gain for " + to_string(make_rule(id)));
    }
  }
}

TrainResult train_with_history(const TrainingSet &set,
                               const TrainConfig &config) {
  Trainer trainer(set, config);
  trainer.run();
  TrainResult result;
  result.model = trainer.model();
  result.accepted_rules = trainer.accepted_rules();
  result.error_history = trainer.error_history();
  return result;
}

Model train(const TrainingSet &set, const TrainConfig &config) {
  return train_with_history(set, config).model;
}

}  // namespace nefnir
