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

// Greedy, error-driven induction of suffix substitution rules.
//
// Every entry starts out predicted as its own lemma. Each iteration collects
// candidate rules from the entries that are still wrong, accepts the one that
// removes the most errors, and applies it to every entry for which it is more
// specific (has a longer match suffix) than the rule currently producing that
// entry's prediction. Training stops when no candidate reduces the error
// count; whatever is still wrong goes into the exception table.
//
// Ties between candidates with equal net gain go to the one with more
// support, then the shorter match suffix, then the smallest
// (tag, match_suffix, source, replacement).

#ifndef NEFNIR_TRAINER_H_
#define NEFNIR_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "nefnir/lexicon.h"
#include "nefnir/rule.h"
#include "nefnir/ruleset.h"

namespace nefnir {

struct TrainConfig {
  // A candidate must lemmatize at least this many training entries correctly.
  size_t min_support = 2;
  // Abort with TrainingError after this many accepted rules. Defaults to the
  // initial error count, which strict progress never exceeds.
  std::optional<size_t> max_iterations;
};

// Suffix lengths (code points) for which an entry generates candidate rules,
// shortest first. Base words: every length from |transform.source| up to the
// whole form. Compounds: suffixes of the final part, then whole parts added
// one boundary at a time.
std::vector<size_t> candidate_suffix_lengths(const LexiconEntry &entry,
                                             const Transform &transform);
std::vector<std::string> candidate_suffixes(const LexiconEntry &entry,
                                            const Transform &transform);

struct CandidateScore {
  Rule rule;
  size_t support = 0;
  int64_t gain = 0;
};

struct TrainResult {
  Model model;
  // In acceptance order.
  std::vector<Rule> accepted_rules;
  // error_history[0] is the initial error count; entry i is the count after
  // the i-th accepted rule.
  std::vector<size_t> error_history;
};

class Trainer {
 public:
  // Tags must already be in the intermediate tagset. Throws UsageError if two
  // entries share (form, tag) or min_support is 0.
  Trainer(const TrainingSet &set, TrainConfig config = {});

  // Accepts and applies the best candidate. Returns nullopt once no
  // candidate has positive gain.
  std::optional<Rule> step();

  // Steps until convergence.
  void run();

  size_t error_count() const { return errors_; }
  size_t iterations() const { return accepted_.size(); }
  const std::vector<Rule> &accepted_rules() const { return accepted_; }
  const std::vector<size_t> &error_history() const { return error_history_; }

  size_t entry_count() const { return entries_.size(); }
  const LexiconEntry &entry(size_t i) const { return source_[i]; }
  // Current predicted lemma of entry i.
  std::string prediction(size_t i) const;
  bool is_correct(size_t i) const { return entries_[i].correct; }
  // Match suffix length of the rule producing entry i's prediction, or -1
  // for the identity baseline.
  int specificity(size_t i) const { return entries_[i].specificity; }

  // The currently eligible candidates with their support and net gain, best
  // first. Linear in the number of candidates; meant for inspection.
  std::vector<CandidateScore> candidates() const;

  // Net gain of accepting rule now, by a direct scan over all entries.
  int64_t score(const Rule &rule) const;

  // (form, tag) -> lemma for every entry the rules still get wrong.
  ExceptionTable build_exception_table() const;

  // Rules plus exceptions. Does not run further iterations.
  Model model() const;

  // Recounts errors and gains from scratch and compares them with the
  // incrementally maintained values. Throws std::logic_error on mismatch.
  void check_consistency() const;

 private:
  struct EntryState {
    uint32_t tag = 0;
    uint32_t transform = 0;
    int32_t specificity = -1;
    int32_t producer = -1;
    bool correct = false;
  };

  // (-own, -support, transform id, candidate id)
  using LocalRank = std::tuple<int64_t, int64_t, uint32_t, uint32_t>;
  // (-gain, -support, suffix length, key id, transform id)
  using GlobalRank = std::tuple<int64_t, int64_t, uint32_t, uint32_t, uint32_t>;

  struct Key {
    uint32_t tag = 0;
    uint32_t length = 0;
    std::string suffix;
    bool accepted = false;
    bool dirty = false;
    std::optional<GlobalRank> queued;
    // -(number of currently correct entries the key would take over).
    int64_t base = 0;
    std::vector<uint32_t> entries;
    std::set<LocalRank> ranked;
  };

  struct Candidate {
    uint32_t key = 0;
    uint32_t transform = 0;
    int64_t support = 0;
    // Entries the key would take over whose minimal transform is this one.
    int64_t own = 0;
    // Currently wrong entries that generate this candidate.
    int64_t generators = 0;
    bool alive = false;
  };

  struct KeyRef {
    uint32_t key;
    int64_t candidate;  // candidate (key, entry transform), or -1
  };

  void build();
  bool eligible(const Candidate &c) const;
  LocalRank local_rank(uint32_t id) const;
  void set_own(uint32_t id, int64_t own);
  void set_generators(uint32_t id, int64_t generators);
  void mark_dirty(uint32_t key);
  void refresh(uint32_t key);
  Rule make_rule(uint32_t candidate) const;
  void apply(uint32_t candidate);

  TrainConfig config_;
  std::vector<LexiconEntry> source_;
  std::vector<EntryState> entries_;
  std::vector<std::string> tags_;
  std::vector<Transform> transforms_;
  std::vector<Key> keys_;
  std::vector<uint32_t> key_order_;
  std::vector<uint32_t> order_to_key_;
  std::vector<Candidate> candidates_;

  // CSR lists per entry: keys matching the entry's form (by increasing
  // suffix length) and the candidates the entry generates.
  std::vector<size_t> key_offsets_;
  std::vector<KeyRef> entry_keys_;
  std::vector<size_t> generated_offsets_;
  std::vector<uint32_t> generated_;

  std::set<GlobalRank> queue_;
  std::vector<uint32_t> dirty_;

  std::vector<Rule> accepted_;
  std::vector<size_t> error_history_;
  size_t errors_ = 0;
  size_t max_iterations_ = 0;
};

// Runs a Trainer to convergence.
TrainResult train_with_history(const TrainingSet &set,
                               const TrainConfig &config = {});
Model train(const TrainingSet &set, const TrainConfig &config = {});

}  // namespace nefnir

#endif  // NEFNIR_TRAINER_H_
