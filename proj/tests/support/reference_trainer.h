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

// Brute-force reference trainer used as a test oracle. It rescans every
// candidate against every entry on each iteration and shares no code with
// the production trainer beyond the LexiconEntry and Rule types.

#ifndef NEFNIR_TESTS_SUPPORT_REFERENCE_TRAINER_H_
#define NEFNIR_TESTS_SUPPORT_REFERENCE_TRAINER_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nefnir/lexicon.h"
#include "nefnir/rule.h"

namespace nefnir::testing {

struct ReferenceResult {
  std::vector<Rule> rules;  // acceptance order
  std::map<std::pair<std::string, std::string>, std::string> exceptions;
  std::vector<size_t> error_history;
};

ReferenceResult reference_train(const std::vector<LexiconEntry> &entries,
                                size_t min_support);

// Longest matching rule by linear scan; nullptr if none.
const Rule *scan_lookup(const std::vector<Rule> &rules, const std::string &form,
                        const std::string &tag);

}  // namespace nefnir::testing

#endif  // NEFNIR_TESTS_SUPPORT_REFERENCE_TRAINER_H_
