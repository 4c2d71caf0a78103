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

#include "nefnir/lexicon.h"

#include <fstream>
#include <istream>
#include <utility>

#include "nefnir/error.h"
#include "nefnir/utf8.h"
#include "tsv.h"

namespace nefnir {
namespace {

using internal::has_whitespace;
using internal::is_skippable;
using internal::read_line;
using internal::split_tabs;

std::string make_key(std::string_view form, std::string_view tag) {
  std::string key;
  key.reserve(form.size() + tag.size() + 1);
  key.append(form);
  key.push_back('\t');
  key.append(tag);
  return key;
}

void check_text(std::string_view field, std::string_view what,
                std::string_view line) {
  if (field.empty()) {
    throw ParseError("empty " + std::string(what), std::string(line));
  }
  if (!utf8::is_valid(field)) {
    throw ParseError("invalid UTF-8 in " + std::string(what),
                     std::string(line));
  }
}

void check_tag(std::string_view tag, std::string_view line) {
  check_text(tag, "tag", line);
  if (has_whitespace(tag)) {
    throw ParseError("whitespace in tag", std::string(line));
  }
  if (tag.find('+') != std::string_view::npos) {
    throw ParseError("compound marker in tag", std::string(line));
  }
}

// Strips '+' markers from a marked form, recording where each part starts.
void parse_form(std::string_view marked, std::string_view line,
                LexiconEntry &entry) {
  check_text(marked, "form", line);
  if (marked.front() == '+' || marked.back() == '+') {
    throw ParseError("compound marker at word edge", std::string(line));
  }
  entry.form.reserve(marked.size());
  size_t code_points = 0;
  bool after_marker = false;
  for (size_t i = 0; i < marked.size(); ++i) {
    const char c = marked[i];
    if (c == '+') {
      if (after_marker) {
        throw ParseError("doubled compound marker", std::string(line));
      }
      entry.part_boundaries.push_back(code_points);
      after_marker = true;
      continue;
    }
    after_marker = false;
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++code_points;
    entry.form.push_back(c);
  }
}

template <typename ParseLine>
TrainingSet read_into(TrainingSet set, std::istream &in, ParseLine parse) {
  std::string line;
  size_t line_number = 0;
  while (read_line(in, line)) {
    ++line_number;
    if (is_skippable(line)) continue;
    try {
      set.add(parse(line), line_number, line);
    } catch (const ParseError &e) {
      set.reject(line_number, line, e.what());
    }
  }
  if (in.bad()) throw IoError("error reading lexicon stream");
  return set;
}

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

}  // namespace

std::string LexiconEntry::marked_form() const {
  if (part_boundaries.empty()) return form;
  const std::vector<size_t> offsets = utf8::offsets(form);
  std::string result;
  result.reserve(form.size() + part_boundaries.size());
  size_t start = 0;
  for (size_t boundary : part_boundaries) {
    result.append(form, start, offsets[boundary] - start);
    result.push_back('+');
    start = offsets[boundary];
  }
  result.append(form, start);
  return result;
}

TrainingSet::AddResult TrainingSet::add(LexiconEntry entry, size_t line_number,
                                        std::string_view raw_line) {
  std::string key = make_key(entry.form, entry.tag);
  auto found = index_.find(key);
  if (found == index_.end()) {
    index_.emplace(std::move(key), entries_.size());
    entries_.push_back(std::move(entry));
    return AddResult::kAdded;
  }
  const LexiconEntry &existing = entries_[found->second];
  if (existing.lemma == entry.lemma) {
    ++duplicates_;
    return AddResult::kDuplicate;
  }
  DiscardedLine record;
  record.line_number = line_number;
  record.line = raw_line.empty() ? entry.marked_form() + '\t' + entry.tag +
                                       '\t' + entry.lemma
                                 : std::string(raw_line);
  record.reason = DiscardReason::kConflictingLemma;
  record.message = "lemma '" + entry.lemma + "' conflicts with '" +
                   existing.lemma + "' for (" + entry.form + ", " + entry.tag +
                   ")";
  conflicts_.push_back(std::move(record));
  return AddResult::kConflict;
}

void TrainingSet::reject(size_t line_number, std::string raw_line,
                         std::string message) {
  conflicts_.push_back({line_number, std::move(raw_line),
                        DiscardReason::kMalformed, std::move(message)});
}

size_t TrainingSet::conflict_count(DiscardReason reason) const {
  size_t count = 0;
  for (const DiscardedLine &record : conflicts_) {
    if (record.reason == reason) ++count;
  }
  return count;
}

const LexiconEntry *TrainingSet::find(std::string_view form,
                                      std::string_view tag) const {
  auto found = index_.find(make_key(form, tag));
  return found == index_.end() ? nullptr : &entries_[found->second];
}

LexiconEntry parse_entry_line(std::string_view line) {
  const auto fields = split_tabs(line);
  if (fields.size() != 3) {
    throw ParseError(
        "expected 3 tab-separated fields, got " + std::to_string(fields.size()),
        std::string(line));
  }
  LexiconEntry entry;
  parse_form(fields[0], line, entry);
  check_tag(fields[1], line);
  check_text(fields[2], "lemma", line);
  if (fields[2].find('+') != std::string_view::npos) {
    throw ParseError("compound marker in lemma", std::string(line));
  }
  entry.tag = fields[1];
  entry.lemma = fields[2];
  return entry;
}

LexiconEntry parse_uninflected_line(std::string_view line) {
  const auto fields = split_tabs(line);
  if (fields.size() != 2) {
    throw ParseError(
        "expected 2 tab-separated fields, got " + std::to_string(fields.size()),
        std::string(line));
  }
  check_text(fields[0], "form", line);
  if (fields[0].find('+') != std::string_view::npos) {
    throw ParseError("compound marker in uninflected word", std::string(line));
  }
  check_tag(fields[1], line);
  LexiconEntry entry;
  entry.form = fields[0];
  entry.tag = fields[1];
  entry.lemma = entry.form;
  return entry;
}

TrainingSet parse_lexicon(std::istream &in) {
  return read_into(TrainingSet(), in, parse_entry_line);
}

TrainingSet parse_lexicon_file(const std::string &path) {
  std::ifstream in = open_input(path);
  return parse_lexicon(in);
}

TrainingSet merge_uninflected(TrainingSet set, std::istream &in) {
  return read_into(std::move(set), in, parse_uninflected_line);
}

TrainingSet merge_uninflected_file(TrainingSet set, const std::string &path) {
  std::ifstream in = open_input(path);
  return merge_uninflected(std::move(set), in);
}

}  // namespace nefnir
