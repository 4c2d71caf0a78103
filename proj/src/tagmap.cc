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

#include "nefnir/tagmap.h"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <utility>

#include "nefnir/error.h"
#include "nefnir/utf8.h"
#include "tsv.h"

namespace nefnir {
namespace {

// 64-bit FNV-1a.
class Fnv1a {
 public:
  void update(std::string_view data) {
    for (unsigned char c : data) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
  }
  uint64_t digest() const { return hash_; }

 private:
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

void check_tag(const std::string &tag, const char *what) {
  if (tag.empty() || internal::has_whitespace(tag) || !utf8::is_valid(tag)) {
    throw ParseError(std::string("invalid ") + what + " tag", tag);
  }
}

}  // namespace

void TagMap::add(std::string source, std::string intermediate) {
  check_tag(source, "source");
  check_tag(intermediate, "intermediate");
  if (mapping_.contains(source)) {
    throw ParseError("duplicate source tag", source);
  }
  mapping_.emplace(std::move(source), std::move(intermediate));
}

std::optional<std::string_view> TagMap::find(std::string_view tag) const {
  auto found = mapping_.find(tag);
  if (found == mapping_.end()) return std::nullopt;
  return std::string_view(found->second);
}

std::string TagMap::map(std::string_view tag, TagStats &stats) const {
  if (auto target = find(tag)) {
    ++stats.mapped;
    return std::string(*target);
  }
  ++stats.unmapped;
  return std::string(tag);
}

std::string TagMap::map(std::string_view tag) const {
  TagStats ignored;
  return map(tag, ignored);
}

bool TagMap::is_idempotent() const {
  for (const auto &[source, target] : mapping_) {
    auto again = mapping_.find(target);
    if (again != mapping_.end() && again->second != target) return false;
  }
  return true;
}

std::string TagMap::content_hash() const {
  Fnv1a hash;
  for (const auto &[source, target] : mapping_) {
    hash.update(source);
    hash.update("\t");
    hash.update(target);
    hash.update("\n");
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash.digest()));
  return buffer;
}

TagMap load_tagmap(std::istream &in) {
  TagMap map;
  std::string line;
  size_t line_number = 0;
  while (internal::read_line(in, line)) {
    ++line_number;
    if (internal::is_skippable(line)) continue;
    const auto fields = internal::split_tabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected source<TAB>intermediate", line, line_number);
    }
    try {
      map.add(std::string(fields[0]), std::string(fields[1]));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line, line_number);
    }
  }
  if (in.bad()) throw IoError("error reading tag map stream");
  return map;
}

TagMap load_tagmap_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_tagmap(in);
}

std::string map_tag(const TagMap &map, std::string_view tag, TagStats &stats) {
  return map.map(tag, stats);
}

TrainingSet map_tags(const TrainingSet &set, const TagMap &map,
                     TagStats &stats) {
  TrainingSet result;
  result.conflicts_ = set.conflicts_;
  result.duplicates_ = set.duplicates_;
  for (const LexiconEntry &entry : set.entries()) {
    LexiconEntry mapped = entry;
    mapped.tag = map.map(entry.tag, stats);
    result.add(std::move(mapped));
  }
  return result;
}

}  // namespace nefnir
