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

// Training data: the (form, tag, lemma) lexicon and the list of uninflected
// words that supplements it.
//
// Lexicon lines are form<TAB>tag<TAB>lemma. A '+' in the form marks the start
// of a compound part ("fjall+göngu+skó"); markers are stripped from the stored
// form and kept as code point indices. Lines starting with '#' are comments,
// blank lines are ignored. Uninflected lines are form<TAB>tag and get
// lemma = form.

#ifndef NEFNIR_LEXICON_H_
#define NEFNIR_LEXICON_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nefnir {

class TagMap;
struct TagStats;

struct LexiconEntry {
  std::string form;
  std::string tag;
  std::string lemma;
  // Code point indices where compound parts 2..n start; empty for base words.
  std::vector<size_t> part_boundaries;

  bool is_compound() const { return !part_boundaries.empty(); }

  // The form with '+' re-inserted at every part boundary.
  std::string marked_form() const;

  bool operator==(const LexiconEntry &) const = default;
};

// Why a line did not become an entry.
enum class DiscardReason {
  kConflictingLemma,  // (form, tag) already present with another lemma
  kMalformed,
};

struct DiscardedLine {
  size_t line_number = 0;  // 0 when the line did not come from a file
  std::string line;
  DiscardReason reason;
  std::string message;
};

// Lexicon entries unique per (form, tag). The first lemma seen for a key
// wins; later conflicting lemmas are recorded, exact repeats are counted.
class TrainingSet {
 public:
  enum class AddResult { kAdded, kDuplicate, kConflict };

  AddResult add(LexiconEntry entry, size_t line_number = 0,
                std::string_view raw_line = {});
  void reject(size_t line_number, std::string raw_line, std::string message);

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  const std::vector<DiscardedLine> &conflicts() const { return conflicts_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Lines that repeated an existing entry's lemma and were dropped silently.
  size_t duplicate_count() const { return duplicates_; }
  size_t conflict_count(DiscardReason reason) const;

  const LexiconEntry *find(std::string_view form, std::string_view tag) const;

 private:
  friend TrainingSet map_tags(const TrainingSet &, const TagMap &, TagStats &);

  std::vector<LexiconEntry> entries_;
  std::vector<DiscardedLine> conflicts_;
  size_t duplicates_ = 0;
  std::unordered_map<std::string, size_t> index_;
};

// Parses one lexicon line. Throws ParseError on malformed input.
LexiconEntry parse_entry_line(std::string_view line);

// Parses one form<TAB>tag line of the uninflected list.
LexiconEntry parse_uninflected_line(std::string_view line);

// Reads a whole lexicon. Malformed lines are recorded in conflicts(), not
// thrown. Throws IoError if the stream fails.
TrainingSet parse_lexicon(std::istream &in);
TrainingSet parse_lexicon_file(const std::string &path);

// Adds every uninflected word to set under the same first-occurrence policy.
TrainingSet merge_uninflected(TrainingSet set, std::istream &in);
TrainingSet merge_uninflected_file(TrainingSet set, const std::string &path);

}  // namespace nefnir

#endif  // NEFNIR_LEXICON_H_
