// Copyright 2026 The cwsdecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cws/code.h"
#include "cws/observables.h"

namespace cws {

/// Malformed input file; the message carries file/line context.
class FormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct CodeDocument {
    std::string name;
    CwsCode code;
    std::optional<ErrorSet> errors;
};

std::string read_text_file(const std::filesystem::path &path);

/// Parses JSON text, reporting syntax errors with line and column.
nlohmann::json parse_json(const std::string &text, const std::string &source);

/// {"n": 10, "adjacency": ["0100110000", ...], "codewords": [...],
///  "errors": [...] (optional), "name": "..." (optional)}.
/// Throws FormatError for schema problems and CodeError for invalid codes.
CodeDocument parse_code_document(const nlohmann::json &doc, const std::string &source);
CodeDocument load_code_file(const std::filesystem::path &path);

/// One error entry: a dense Pauli string ("IYII", "-iXZ"), a sparse
/// product ("Y_2", "X_1*Z_3"), or {"label": ..., "pauli": ...}.
LabeledError parse_error_entry(const nlohmann::json &entry, std::size_t n);
ErrorSet parse_error_list(const nlohmann::json &list, std::size_t n);
/// Accepts either a bare list or {"errors": [...]}.
ErrorSet load_error_file(const std::filesystem::path &path, std::size_t n);

/// Hex SHA-256 of CwsCode::canonical_text().
std::string code_hash(const CwsCode &code);

/// Name of type-4 observable `index` in plans: A_1, A_2, ...
std::string observable_name(std::size_t index);

nlohmann::json plan_to_json(const DecodingPlan &plan, const CwsCode &code, const ErrorSet &errors);

struct LoadedPlan {
    std::string code_hash;
    ErrorSet errors;
    DecodingPlan plan;
};

LoadedPlan plan_from_json(const nlohmann::json &doc, std::size_t n);

/// Sign header per class, one row per type-4 measurement; '.' marks errors
/// the measurement is not applied to.
std::string render_sign_table(const DecodingPlan &plan, const ErrorSet &errors);

/// Reference decoding table supplied from outside: Pauli observables,
/// named type-4 observables, and per-class expected eigenvalues.
struct ExternalTable {
    struct Observable {
        std::string name;
        Type4Observable op;
    };
    struct Entry {
        std::string signs;
        std::vector<std::string> errors;
        std::string observable;
        std::string eigenvalues;  // one '+'/'-' per error, same order
    };
    std::vector<BinaryVector> pauli_observables;
    std::vector<Observable> observables;
    std::vector<Entry> entries;
};

ExternalTable parse_external_table(const nlohmann::json &doc, std::size_t n);

}  // namespace cws
