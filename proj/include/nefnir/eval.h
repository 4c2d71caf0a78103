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

// Scoring predicted lemmas against a gold corpus.

#ifndef NEFNIR_EVAL_H_
#define NEFNIR_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nefnir/ruleset.h"

namespace nefnir {

// A percentage held as an integer number of hundredths, printed with two
// decimals.
class Percent {
 public:
  constexpr Percent() = default;
  static constexpr Percent from_hundredths(int64_t hundredths) {
    Percent p;
    p.hundredths_ = hundredths;
    return p;
  }

  // 100 * part / whole, rounded half up to two decimals. whole must be > 0.
  static Percent ratio(uint64_t part, uint64_t whole);

  constexpr int64_t hundredths() const { return hundredths_; }
  double value() const { return static_cast<double>(hundredths_) / 100.0; }
  std::string str() const;

  auto operator<=>(const Percent &) const = default;

 private:
  int64_t hundredths_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Percent &percent);

struct TokenRecord {
  std::string form;
  std::string gold_tag;
  std::optional<std::string> auto_tag;
  std::string gold_lemma;
  std::string predicted_lemma;
  // Unknown when scoring predictions read from a file.
  std::optional<Provenance> provenance;
};

enum Flag : unsigned {
  kFlagNone = 0,
  kFlagTagMismatch = 1u << 0,
  kFlagCapitalization = 1u << 1,
  kFlagIdentityFallback = 1u << 2,
};

// Comma-separated flag names, or "-".
std::string flag_names(unsigned flags);

struct Disagreement {
  size_t index = 0;  // position in the evaluated sequence
  TokenRecord record;
  unsigned flags = kFlagNone;
};

struct EvalReport {
  size_t total = 0;
  size_t errors = 0;
  Percent accuracy;
  // In input order.
  std::vector<Disagreement> disagreements;
};

// Throws UndefinedMetricError if total is 0, UsageError if errors > total.
Percent accuracy(size_t total, size_t errors);

// Exact code point comparison of predicted and gold lemmas.
EvalReport evaluate(const std::vector<TokenRecord> &records);

// Share of records whose automatic tag equals the gold tag. Throws
// UsageError if a record has no automatic tag.
Percent tag_accuracy(const std::vector<TokenRecord> &records);

// Flags for one mismatched record.
unsigned disagreement_flags(const TokenRecord &record);

// form, gold_tag, auto_tag, gold_lemma, predicted_lemma, provenance, flags.
void write_disagreements(const EvalReport &report, std::ostream &out);

}  // namespace nefnir

#endif  // NEFNIR_EVAL_H_
