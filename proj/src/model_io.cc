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

#include "nefnir/model_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "nefnir/error.h"
#include "nefnir/utf8.h"
#include "tsv.h"

namespace nefnir {
namespace {

constexpr std::string_view kMagic = "nefnir-model";
constexpr std::string_view kTagmapPrefix = "tagmap ";
constexpr std::string_view kExceptionsMarker = "[exceptions]";
constexpr std::string_view kRulesMarker = "[rules]";

[[noreturn]] void fail(size_t line_number, const std::string &message,
                       std::string_view line) {
  throw ModelFormatError("model line " + std::to_string(line_number) + ": " +
                         message + ": '" + std::string(line) + "'");
}

class LineReader {
 public:
  explicit LineReader(std::istream &in) : in_(in) {}

  bool next(std::string &line) {
    if (!std::getline(in_, line)) {
      if (in_.bad()) throw IoError("error reading model stream");
      return false;
    }
    ++number_;
    return true;
  }

  size_t number() const { return number_; }

 private:
  std::istream &in_;
  size_t number_ = 0;
};

std::vector<std::string> read_fields(std::string_view line, size_t expected,
                                     size_t line_number) {
  const auto raw = internal::split_tabs(line);
  if (raw.size() != expected) {
    fail(line_number,
         "expected " + std::to_string(expected) + " fields, got " +
             std::to_string(raw.size()),
         line);
  }
  std::vector<std::string> fields;
  fields.reserve(raw.size());
  for (std::string_view field : raw) {
    try {
      fields.push_back(unescape_field(field));
    } catch (const ModelFormatError &e) {
      fail(line_number, e.what(), line);
    }
    if (!utf8::is_valid(fields.back())) {
      fail(line_number, "invalid UTF-8", line);
    }
  }
  return fields;
}

}  // namespace

std::string escape_field(std::string_view field) {
  if (field.empty()) return "\\0";
  std::string result;
  result.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\':
        result += "\\\\";
        break;
      case '\t':
        result += "\\t";
        break;
      case '\n':
        result += "\\n";
        break;
      case '\r':
        result += "\\r";
        break;
      default:
        result.push_back(c);
    }
  }
  return result;
}

std::string unescape_field(std::string_view field) {
  if (field == "\\0") return std::string();
  if (field.empty())
    throw ModelFormatError("empty field must be written as \\0");
  std::string result;
  result.reserve(field.size());
  for (size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\') {
      result.push_back(field[i]);
      continue;
    }
    if (++i == field.size()) throw ModelFormatError("dangling backslash");
    switch (field[i]) {
      case '\\':
        result.push_back('\\');
        break;
      case 't':
        result.push_back('\t');
        break;
      case 'n':
        result.push_back('\n');
        break;
      case 'r':
        result.push_back('\r');
        break;
      default:
        throw ModelFormatError(std::string("unknown escape \\") + field[i]);
    }
  }
  return result;
}

void serialize_model(const Model &model, std::ostream &out) {
  out << kMagic << ' ' << model.format_version << '\n';
  out << kTagmapPrefix
      << (model.tagmap_hash.empty() ? std::string("-") : model.tagmap_hash)
      << '\n';
  out << kExceptionsMarker << '\n';
  for (const auto &item : model.exceptions.sorted()) {
    out << escape_field(item.form) << '\t' << escape_field(item.tag) << '\t'
        << escape_field(item.lemma) << '\n';
  }
  out << kRulesMarker << '\n';
  for (const Rule &rule : model.rules.sorted()) {
    out << escape_field(rule.match_suffix) << '\t' << escape_field(rule.tag)
        << '\t' << escape_field(rule.transform.source) << '\t'
        << escape_field(rule.transform.replacement) << '\n';
  }
  if (!out) throw IoError("error writing model");
}

std::string serialize_model(const Model &model) {
  std::ostringstream out;
  serialize_model(model, out);
  return out.str();
}

void save_model_file(const Model &model, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  serialize_model(model, out);
  out.close();
  if (!out) throw IoError("error writing '" + path + "'");
}

Model load_model(std::istream &in) {
  LineReader reader(in);
  std::string line;
  Model model;

  if (!reader.next(line)) throw ModelFormatError("empty model file");
  const std::string expected_header =
      std::string(kMagic) + ' ' + std::to_string(Model::kFormatVersion);
  if (line != expected_header) {
    if (line.starts_with(std::string(kMagic) + ' ')) {
      fail(reader.number(), "unsupported model format version", line);
    }
    fail(reader.number(), "not a model file", line);
  }

  if (!reader.next(line) || !line.starts_with(kTagmapPrefix)) {
    fail(reader.number(), "expected tagmap line", line);
  }
  const std::string hash = line.substr(kTagmapPrefix.size());
  if (hash.empty() || internal::has_whitespace(hash)) {
    fail(reader.number(), "bad tagmap digest", line);
  }
  model.tagmap_hash = hash == "-" ? std::string() : hash;

  if (!reader.next(line) || line != kExceptionsMarker) {
    fail(reader.number(), "expected [exceptions]", line);
  }
  bool saw_rules = false;
  while (reader.next(line)) {
    if (line == kRulesMarker) {
      saw_rules = true;
      break;
    }
    auto fields = read_fields(line, 3, reader.number());
    if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      fail(reader.number(), "empty exception field", line);
    }
    try {
      model.exceptions.add(std::move(fields[0]), std::move(fields[1]),
                           std::move(fields[2]));
    } catch (const UsageError &e) {
      fail(reader.number(), e.what(), line);
    }
  }
  if (!saw_rules) fail(reader.number(), "missing [rules] section", line);

  while (reader.next(line)) {
    auto fields = read_fields(line, 4, reader.number());
    Rule rule{std::move(fields[0]), std::move(fields[1]),
              Transform{std::move(fields[2]), std::move(fields[3])}};
    if (rule.tag.empty()) fail(reader.number(), "empty rule tag", line);
    try {
      model.rules.add(std::move(rule));
    } catch (const UsageError &e) {
      fail(reader.number(), e.what(), line);
    }
  }
  return model;
}

Model load_model_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_model(in);
}

}  // namespace nefnir
