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

// Translation of lexicon and corpus tags into a shared intermediate tagset.

#ifndef NEFNIR_TAGMAP_H_
#define NEFNIR_TAGMAP_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nefnir/lexicon.h"

namespace nefnir {

// Per-run counters. Owned by the caller, never by the map.
struct TagStats {
  size_t mapped = 0;
  size_t unmapped = 0;
};

class TagMap {
 public:
  // The identity map: every tag passes through.
  TagMap() = default;

  // Adds source -> intermediate. Throws ParseError if source is already
  // mapped or either tag is empty or contains whitespace.
  void add(std::string source, std::string intermediate);

  // Maps tag; unknown tags pass through unchanged and count as unmapped.
  std::string map(std::string_view tag, TagStats &stats) const;
  std::string map(std::string_view tag) const;

  std::optional<std::string_view> find(std::string_view tag) const;

  size_t size() const { return mapping_.size(); }
  bool is_identity() const { return mapping_.empty(); }

  // True when no intermediate tag is also a source tag, which makes map()
  // idempotent.
  bool is_idempotent() const;

  // Hex digest of the canonical (sorted) mapping, recorded in model files.
  std::string content_hash() const;

  const std::map<std::string, std::string, std::less<>> &mapping() const {
    return mapping_;
  }

 private:
  std::map<std::string, std::string, std::less<>> mapping_;
};

// Reads source<TAB>intermediate lines. An empty stream gives the identity
// map. Throws ParseError (with line number) on malformed or duplicate lines.
TagMap load_tagmap(std::istream &in);
TagMap load_tagmap_file(const std::string &path);

std::string map_tag(const TagMap &map, std::string_view tag, TagStats &stats);

// Rewrites every entry's tag. Entries that collide after mapping are resolved
// with the usual first-occurrence policy; the input's own conflict records are
// carried over.
TrainingSet map_tags(const TrainingSet &set, const TagMap &map,
                     TagStats &stats);

}  // namespace nefnir

#endif  // NEFNIR_TAGMAP_H_
