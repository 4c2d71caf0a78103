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

// Line-oriented text format for trained models:
//
//   nefnir-model 1
//   tagmap <hex digest or ->
//   [exceptions]
//   form<TAB>tag<TAB>lemma              sorted by (form, tag)
//   [rules]
//   suffix<TAB>tag<TAB>source<TAB>replacement
//                                       sorted by (tag, reversed suffix,
//                                       suffix)
//
// Fields escape backslash, tab, newline and carriage return as \\, \t, \n and
// \r; the empty string is written as \0. Output depends only on model
// content.

#ifndef NEFNIR_MODEL_IO_H_
#define NEFNIR_MODEL_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "nefnir/ruleset.h"

namespace nefnir {

std::string escape_field(std::string_view field);
// Throws ModelFormatError on a bad escape sequence.
std::string unescape_field(std::string_view field);

void serialize_model(const Model &model, std::ostream &out);
std::string serialize_model(const Model &model);
void save_model_file(const Model &model, const std::string &path);

// Throws ModelFormatError naming the offending line on any format violation.
Model load_model(std::istream &in);
Model load_model_file(const std::string &path);

}  // namespace nefnir

#endif  // NEFNIR_MODEL_IO_H_
