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

#include "nefnir/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "nefnir/error.h"
#include "nefnir/eval.h"
#include "nefnir/lexicon.h"
#include "nefnir/model_io.h"
#include "nefnir/trainer.h"
#include "nefnir/utf8.h"
#include "tsv.h"

namespace nefnir {
namespace {

class Log {
 public:
  Log(std::ostream &out, int verbosity) : out_(out), verbosity_(verbosity) {}

  std::ostream &info() { return verbosity_ >= 1 ? out_ : null_; }
  std::ostream &debug() { return verbosity_ >= 2 ? out_ : null_; }
  std::ostream &warn() { return out_ << "warning: "; }
  std::ostream &error() { return out_ << "error: "; }

 private:
  struct NullBuffer : std::streambuf {
    int overflow(int c) override { return c; }
  };
  std::ostream &out_;
  int verbosity_;
  NullBuffer null_buffer_;
  std::ostream null_{&null_buffer_};
};

TagMap load_optional_tagmap(const std::string &path) {
  return path.empty() ? TagMap() : load_tagmap_file(path);
}

void check_tagmap_hash(const Model &model, const TagMap &tagmap,
                       bool tagmap_given, Log &log) {
  const std::string runtime = tagmap_given ? tagmap.content_hash() : "";
  if (runtime != model.tagmap_hash) {
    log.warn() << "tag map " << (runtime.empty() ? "-" : runtime)
               << " differs from the one the model was trained with ("
               << (model.tagmap_hash.empty() ? "-" : model.tagmap_hash)
               << ")\n";
  }
}

void log_unmapped(const TagStats &stats, const TagMap &tagmap, Log &log) {
  if (!tagmap.is_identity() && stats.unmapped > 0) {
    log.warn() << stats.unmapped << " tag(s) not in the tag map were passed "
               << "through unchanged\n";
  }
}

// One gold corpus line: token, gold tag, gold lemma, optional auto tag.
struct GoldToken {
  std::string form;
  std::string gold_tag;
  std::string gold_lemma;
  std::optional<std::string> auto_tag;
};

std::vector<GoldToken> read_gold(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<GoldToken> tokens;
  std::string line;
  size_t line_number = 0;
  while (internal::read_line(in, line)) {
    ++line_number;
    if (internal::is_blank(line)) continue;
    const auto fields = internal::split_tabs(line);
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError(path + ": expected 3 or 4 fields", line, line_number);
    }
    for (auto field : fields) {
      if (field.empty() || !utf8::is_valid(field)) {
        throw ParseError(path + ": empty or invalid field", line, line_number);
      }
    }
    GoldToken token{std::string(fields[0]), std::string(fields[1]),
                    std::string(fields[2]), std::nullopt};
    if (fields.size() == 4) token.auto_tag = std::string(fields[3]);
    if (!tokens.empty() &&
        tokens.front().auto_tag.has_value() != token.auto_tag.has_value()) {
      throw ParseError(
          path + ": automatic tag column present on some lines only", line,
          line_number);
    }
    tokens.push_back(std::move(token));
  }
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return tokens;
}

// Predictions in lemmatize output format, aligned with the gold tokens.
std::vector<std::string> read_predictions(const std::string &path,
                                          const std::vector<GoldToken> &gold) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::string> lemmas;
  std::string line;
  size_t line_number = 0;
  while (internal::read_line(in, line)) {
    ++line_number;
    if (internal::is_blank(line)) continue;
    const auto fields = internal::split_tabs(line);
    if (fields.size() < 3) {
      throw ParseError(path + ": expected token<TAB>tag<TAB>lemma", line,
                       line_number);
    }
    if (lemmas.size() >= gold.size()) {
      throw ParseError(path + ": more predictions than gold tokens", line,
                       line_number);
    }
    if (fields[0] != gold[lemmas.size()].form) {
      throw ParseError(path + ": token does not match gold token '" +
                           gold[lemmas.size()].form + "'",
                       line, line_number);
    }
    lemmas.emplace_back(fields[2]);
  }
  if (lemmas.size() != gold.size()) {
    throw Error(path + ": " + std::to_string(lemmas.size()) +
                " predictions for " + std::to_string(gold.size()) +
                " gold tokens");
  }
  return lemmas;
}

void print_row(std::ostream &out, const char *label, const EvalReport &report) {
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), "%-12s %10s %8zu\n", label,
                report.accuracy.str().c_str(), report.errors);
  out << buffer;
}

template <typename Body>
int guarded(Log &log, Body body) {
  try {
    return body();
  } catch (const UsageError &e) {
    log.error() << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    log.error() << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

LemmatizeStats lemmatize_stream(const Model &model, const TagMap &tagmap,
                                const LemmatizeOptions &options,
                                std::istream &in, std::ostream &out,
                                std::ostream &log) {
  LemmatizeStats stats;
  std::string line;
  std::string tag;
  size_t line_number = 0;
  while (internal::read_line(in, line)) {
    ++line_number;
    if (internal::is_blank(line)) {
      out << line << '\n';
      continue;
    }
    ++stats.tokens;
    const auto fields = internal::split_tabs(line);
    const std::string_view token = fields[0];
    const std::string_view raw_tag = fields.size() > 1 ? fields[1] : "";
    const bool valid = fields.size() == 2 && !token.empty() &&
                       !raw_tag.empty() && utf8::is_valid(line);
    if (!valid) {
      ++stats.malformed;
      ++stats.identity;
      log << "warning: line " << line_number
          << ": expected token<TAB>tag, passing token through\n";
      out << token << '\t' << raw_tag << '\t' << token << '\n';
      continue;
    }
    tag = tagmap.map(raw_tag, stats.tags);
    const LemmaResult result = lemmatize(model, token, tag, options);
    switch (result.provenance) {
      case Provenance::kException:
        ++stats.exceptions;
        break;
      case Provenance::kRule:
        ++stats.rules;
        break;
      case Provenance::kIdentity:
        ++stats.identity;
        break;
    }
    if (result.case_folded) ++stats.case_folded;
    out << token << '\t' << raw_tag << '\t' << result.lemma << '\n';
  }
  if (in.bad()) throw IoError("error reading input");
  out.flush();
  if (!out) throw IoError("error writing output");
  return stats;
}

int run_train(const RunConfig &config, std::ostream &log_stream) {
  Log log(log_stream, config.verbosity);
  return guarded(log, [&] {
    if (config.lexicon.empty()) throw UsageError("train needs --lexicon");
    if (config.model.empty()) throw UsageError("train needs --out");
    if (config.min_support == 0) throw UsageError("--min-support must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    TrainingSet set = parse_lexicon_file(config.lexicon);
    if (!config.uninflected.empty()) {
      set = merge_uninflected_file(std::move(set), config.uninflected);
    }
    const TagMap tagmap = load_optional_tagmap(config.tagmap);
    if (!tagmap.is_idempotent()) {
      log.warn() << "tag map is not idempotent: some intermediate tags are "
                 << "also source tags\n";
    }
    TagStats tag_stats;
    set = map_tags(set, tagmap, tag_stats);
    log_unmapped(tag_stats, tagmap, log);

    for (const DiscardedLine &record : set.conflicts()) {
      log.debug() << "discarded line " << record.line_number << ": "
                  << record.message << '\n';
    }
    log.info() << "entries: " << set.size()
               << ", duplicates: " << set.duplicate_count()
               << ", conflicting lemmas: "
               << set.conflict_count(DiscardReason::kConflictingLemma)
               << ", malformed lines: "
               << set.conflict_count(DiscardReason::kMalformed) << '\n';
    if (set.empty()) log.warn() << "empty training set, writing empty model\n";

    TrainConfig train_config;
    train_config.min_support = config.min_support;
    Trainer trainer(set, train_config);
    log.info() << "initial errors: " << trainer.error_count() << '\n';
    while (auto rule = trainer.step()) {
      log.debug() << "rule " << trainer.iterations() << ": " << to_string(*rule)
                  << " -> " << trainer.error_count() << " errors\n";
    }
    Model model = trainer.model();
    if (!config.tagmap.empty()) model.tagmap_hash = tagmap.content_hash();
    save_model_file(model, config.model);

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    log.info() << "rules: " << model.rules.size()
               << ", exceptions: " << model.exceptions.size()
               << ", iterations: " << trainer.iterations()
               << ", time: " << seconds << "s\n";
    return kExitOk;
  });
}

int run_lemmatize(const RunConfig &config, std::istream &in, std::ostream &out,
                  std::ostream &log_stream) {
  Log log(log_stream, config.verbosity);
  return guarded(log, [&] {
    if (config.model.empty()) throw UsageError("lemmatize needs --model");
    const Model model = load_model_file(config.model);
    const TagMap tagmap = load_optional_tagmap(config.tagmap);
    check_tagmap_hash(model, tagmap, !config.tagmap.empty(), log);

    std::ifstream input_file;
    std::istream *input = &in;
    if (!config.input.empty()) {
      input_file.open(config.input, std::ios::binary);
      if (!input_file) throw IoError("cannot open '" + config.input + "'");
      input = &input_file;
    }
    std::ofstream output_file;
    std::ostream *output = &out;
    if (!config.output.empty()) {
      output_file.open(config.output, std::ios::binary);
      if (!output_file) {
        throw IoError("cannot open '" + config.output + "' for writing");
      }
      output = &output_file;
    }

    LemmatizeOptions options;
    options.case_fallback = config.case_fallback;
    const LemmatizeStats stats =
        lemmatize_stream(model, tagmap, options, *input, *output, log_stream);
    log_unmapped(stats.tags, tagmap, log);
    log.debug() << "tokens: " << stats.tokens
                << ", exceptions: " << stats.exceptions
                << ", rules: " << stats.rules
                << ", identity: " << stats.identity
                << ", case-folded: " << stats.case_folded
                << ", malformed: " << stats.malformed << '\n';
    return kExitOk;
  });
}

int run_eval(const RunConfig &config, std::ostream &out,
             std::ostream &log_stream) {
  Log log(log_stream, config.verbosity);
  return guarded(log, [&] {
    if (config.gold.empty()) throw UsageError("eval needs --gold");
    if (config.model.empty() == config.pred.empty()) {
      throw UsageError("eval needs exactly one of --model and --pred");
    }
    const std::vector<GoldToken> gold = read_gold(config.gold);
    if (gold.empty()) throw UndefinedMetricError("gold corpus has no tokens");
    const bool has_auto = gold.front().auto_tag.has_value();

    std::vector<TokenRecord> records(gold.size());
    for (size_t i = 0; i < gold.size(); ++i) {
      records[i].form = gold[i].form;
      records[i].gold_tag = gold[i].gold_tag;
      records[i].auto_tag = gold[i].auto_tag;
      records[i].gold_lemma = gold[i].gold_lemma;
    }

    std::vector<std::pair<const char *, EvalReport>> rows;
    if (!config.pred.empty()) {
      const auto lemmas = read_predictions(config.pred, gold);
      for (size_t i = 0; i < records.size(); ++i) {
        records[i].predicted_lemma = lemmas[i];
      }
      rows.emplace_back("predictions", evaluate(records));
    } else {
      const Model model = load_model_file(config.model);
      const TagMap tagmap = load_optional_tagmap(config.tagmap);
      check_tagmap_hash(model, tagmap, !config.tagmap.empty(), log);
      LemmatizeOptions options;
      options.case_fallback = config.case_fallback;
      TagStats tag_stats;
      auto score_with = [&](bool use_auto) {
        for (TokenRecord &record : records) {
          const std::string &tag =
              use_auto ? *record.auto_tag : record.gold_tag;
          LemmaResult result = lemmatize(model, record.form,
                                         tagmap.map(tag, tag_stats), options);
          record.predicted_lemma = std::move(result.lemma);
          record.provenance = result.provenance;
        }
        return evaluate(records);
      };
      rows.emplace_back("gold tags", score_with(false));
      if (has_auto) rows.emplace_back("auto tags", score_with(true));
      log_unmapped(tag_stats, tagmap, log);
    }

    out << "tokens: " << records.size() << '\n';
    char header[96];
    std::snprintf(header, sizeof(header), "%-12s %10s %8s\n", "", "accuracy",
                  "errors");
    out << header;
    for (const auto &[label, report] : rows) print_row(out, label, report);
    if (has_auto) out << "tag accuracy: " << tag_accuracy(records) << '\n';

    if (!config.report.empty()) {
      std::ofstream report(config.report, std::ios::binary);
      if (!report) throw IoError("cannot open '" + config.report + "'");
      for (const auto &[label, eval_report] : rows) {
        report << "## " << label << '\n';
        write_disagreements(eval_report, report);
      }
      if (!report) throw IoError("error writing '" + config.report + "'");
    }
    return kExitOk;
  });
}

int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &log) {
  RunConfig config;
  CLI::App app{"Suffix-rule lemmatizer for PoS-tagged text", "nefnir"};
  app.require_subcommand(1);
  app.fallthrough();
  int verbose = 0;
  bool quiet = false;
  app.add_flag("-v,--verbose", verbose, "More logging (repeatable)");
  app.add_flag("-q,--quiet", quiet, "Only warnings and errors");

  CLI::App *train = app.add_subcommand("train", "Learn a model from a lexicon");
  train->add_option("--lexicon", config.lexicon, "form<TAB>tag<TAB>lemma file")
      ->required();
  train->add_option("--uninflected", config.uninflected,
                    "form<TAB>tag list of uninflected words");
  train->add_option("--tagmap", config.tagmap,
                    "source<TAB>intermediate tag translation");
  train
      ->add_option("--min-support", config.min_support,
                   "Entries a rule must lemmatize correctly")
      ->check(CLI::PositiveNumber);
  train->add_option("--out", config.model, "Model file to write")->required();

  CLI::App *lemmatize_cmd =
      app.add_subcommand("lemmatize", "Lemmatize token<TAB>tag lines");
  lemmatize_cmd->add_option("--model", config.model, "Model file")->required();
  lemmatize_cmd->add_option("--tagmap", config.tagmap, "Tag translation");
  lemmatize_cmd->add_flag("--case-fallback", config.case_fallback,
                          "Retry with the first letter lowercased");
  lemmatize_cmd->add_option("--input", config.input, "Default: stdin");
  lemmatize_cmd->add_option("--output", config.output, "Default: stdout");

  CLI::App *eval = app.add_subcommand("eval", "Score against a gold corpus");
  eval->add_option("--gold", config.gold,
                   "token<TAB>gold_tag<TAB>gold_lemma[<TAB>auto_tag]")
      ->required();
  auto *model_opt = eval->add_option("--model", config.model, "Model file");
  auto *pred_opt =
      eval->add_option("--pred", config.pred, "token<TAB>tag<TAB>lemma file");
  model_opt->excludes(pred_opt);
  eval->add_option("--tagmap", config.tagmap, "Tag translation");
  eval->add_flag("--case-fallback", config.case_fallback,
                 "Retry with the first letter lowercased");
  eval->add_option("--report", config.report, "Disagreement TSV to write");

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const std::string &arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, log);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.verbosity = quiet ? 0 : 1 + verbose;

  if (train->parsed()) {
    config.command = RunConfig::Command::kTrain;
    return run_train(config, log);
  }
  if (lemmatize_cmd->parsed()) {
    config.command = RunConfig::Command::kLemmatize;
    return run_lemmatize(config, in, out, log);
  }
  config.command = RunConfig::Command::kEval;
  return run_eval(config, out, log);
}

}  // namespace nefnir
