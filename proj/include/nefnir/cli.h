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

// train / lemmatize / eval workflows behind the nefnir command line tool.

#ifndef NEFNIR_CLI_H_
#define NEFNIR_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "nefnir/ruleset.h"
#include "nefnir/tagmap.h"

namespace nefnir {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
};

struct RunConfig {
  enum class Command { kTrain, kLemmatize, kEval };

  Command command = Command::kLemmatize;
  std::string lexicon;
  std::string uninflected;
  std::string tagmap;
  std::string model;
  std::string input;   // empty: standard input
  std::string output;  // empty: standard output
  std::string gold;
  std::string pred;
  std::string report;
  size_t min_support = 2;
  bool case_fallback = false;
  // 0 quiet, 1 normal, 2 verbose.
  int verbosity = 1;
};

struct LemmatizeStats {
  size_t tokens = 0;
  size_t malformed = 0;
  size_t exceptions = 0;
  size_t rules = 0;
  size_t identity = 0;
  size_t case_folded = 0;
  TagStats tags;
};

// Reads token<TAB>tag lines, writes token<TAB>tag<TAB>lemma lines. Blank
// lines are copied through. Malformed lines get an identity lemma and a
// warning on log. Memory use does not depend on input length.
LemmatizeStats lemmatize_stream(const Model &model, const TagMap &tagmap,
                                const LemmatizeOptions &options,
                                std::istream &in, std::ostream &out,
                                std::ostream &log);

// Each returns an ExitCode; errors are reported on log.
int run_train(const RunConfig &config, std::ostream &log);
int run_lemmatize(const RunConfig &config, std::istream &in, std::ostream &out,
                  std::ostream &log);
int run_eval(const RunConfig &config, std::ostream &out, std::ostream &log);

// Parses arguments (argv[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &log);

}  // namespace nefnir

#endif  // NEFNIR_CLI_H_
