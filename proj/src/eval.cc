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

#include "nefnir/eval.h"

#include <cstdio>
#include <ostream>

#include "nefnir/error.h"
#include "nefnir/utf8.h"

namespace nefnir {

Percent Percent::ratio(uint64_t part, uint64_t whole) {
  if (whole == 0) throw UndefinedMetricError("percentage of an empty total");
  // round(10000 * part / whole) with halves going up, in integers.
  const unsigned __int128 scaled = static_cast<unsigned __int128>(part) * 20000;
  const unsigned __int128 rounded =
      (scaled + whole) / (2 * static_cast<unsigned __int128>(whole));
  return from_hundredths(static_cast<int64_t>(rounded));
}

std::string Percent::str() const {
  char buffer[32];
  const int64_t magnitude = hundredths_ < 0 ? -hundredths_ : hundredths_;
  std::snprintf(buffer, sizeof(buffer), "%s%lld.%02lld",
                hundredths_ < 0 ? "-" : "",
                static_cast<long long>(magnitude / 100),
                static_cast<long long>(magnitude % 100));
  return buffer;
}

std::ostream &operator<<(std::ostream &out, const Percent &percent) {
  return out << percent.str();
}

std::string flag_names(unsigned flags) {
  std::string names;
  auto add = [&](unsigned bit, const char *name) {
    if (!(flags & bit)) return;
    if (!names.empty()) names += ',';
    names += name;
  };
  add(kFlagTagMismatch, "tag-mismatch");
  add(kFlagCapitalization, "capitalization");
  add(kFlagIdentityFallback, "identity-fallback");
  return names.empty() ? "-" : names;
}

Percent accuracy(size_t total, size_t errors) {
  if (total == 0) throw UndefinedMetricError("accuracy over zero tokens");
  if (errors > total) throw UsageError("more errors than tokens");
  return Percent::ratio(total - errors, total);
}

unsigned disagreement_flags(const TokenRecord &record) {
  unsigned flags = kFlagNone;
  if (record.auto_tag && *record.auto_tag != record.gold_tag) {
    flags |= kFlagTagMismatch;
  }
  if (record.predicted_lemma != record.gold_lemma &&
      utf8::lower(record.predicted_lemma) == utf8::lower(record.gold_lemma)) {
    flags |= kFlagCapitalization;
  }
  if (record.provenance == Provenance::kIdentity) {
    flags |= kFlagIdentityFallback;
  }
  return flags;
}

EvalReport evaluate(const std::vector<TokenRecord> &records) {
  if (records.empty()) throw UndefinedMetricError("nothing to evaluate");
  EvalReport report;
  report.total = records.size();
  for (size_t i = 0; i < records.size(); ++i) {
    const TokenRecord &record = records[i];
    if (record.predicted_lemma == record.gold_lemma) continue;
    ++report.errors;
    report.disagreements.push_back({i, record, disagreement_flags(record)});
  }
  report.accuracy = accuracy(report.total, report.errors);
  return report;
}

Percent tag_accuracy(const std::vector<TokenRecord> &records) {
  if (records.empty()) throw UndefinedMetricError("no tagged tokens");
  size_t agree = 0;
  for (const TokenRecord &record : records) {
    if (!record.auto_tag) {
      throw UsageError("record '" + record.form + "' has no automatic tag");
    }
    if (*record.auto_tag == record.gold_tag) ++agree;
  }
  return Percent::ratio(agree, records.size());
}

void write_disagreements(const EvalReport &report, std::ostream &out) {
  out << "#form\tgold_tag\tauto_tag\tgold_lemma\tpredicted_lemma\tprovenance"
         "\tflags\n";
  for (const Disagreement &d : report.disagreements) {
    const TokenRecord &r = d.record;
    out << r.form << '\t' << r.gold_tag << '\t'
        << (r.auto_tag ? *r.auto_tag : std::string("-")) << '\t' << r.gold_lemma
        << '\t' << r.predicted_lemma << '\t'
        << (r.provenance ? to_string(*r.provenance) : "-") << '\t'
        << flag_names(d.flags) << '\n';
  }
}

}  // namespace nefnir
