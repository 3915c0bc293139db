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

#include "cws/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace cws {

using nlohmann::json;

namespace {

std::string line_context(const std::string &text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < text.size() && k + 1 < byte; ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json &require(const json &doc, const char *key, const std::string &source) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw FormatError(source + ": missing required field '" + key + "'");
    }
    return doc.at(key);
}

std::string require_string(const json &value, const std::string &what) {
    if (!value.is_string()) {
        throw FormatError(what + " must be a string");
    }
    return value.get<std::string>();
}

BinaryVector parse_bits(const json &value, std::size_t n, const std::string &what) {
    auto text = require_string(value, what);
    BinaryVector v;
    try {
        v = BinaryVector::from_string(text);
    } catch (const std::invalid_argument &) {
        throw FormatError(what + " ('" + text + "') must contain only 0 and 1");
    }
    if (v.size() != n) {
        throw FormatError(what + " ('" + text + "') has length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(n));
    }
    return v;
}

std::vector<BinaryVector> parse_bit_list(const json &value, std::size_t n, const std::string &what) {
    if (!value.is_array()) {
        throw FormatError(what + " must be a list of 0/1 strings");
    }
    std::vector<BinaryVector> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(parse_bits(value[i], n, what + "[" + std::to_string(i) + "]"));
    }
    return out;
}

// "X_1*Z_3" or "Y_2"; nullopt if the text is not in sparse form.
std::optional<PauliOperator> parse_sparse(const std::string &text, std::size_t n) {
    if (text.find('_') == std::string::npos || text.size() < 3) {
        return std::nullopt;
    }
    PauliOperator out(n);
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, '*')) {
        if (token.size() < 3 || token[1] != '_' || !std::strchr("XYZ", token[0])) {
            return std::nullopt;
        }
        auto digits = token.substr(2);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
            return std::nullopt;
        }
        auto q = std::stoul(digits);
        if (q < 1 || q > n) {
            throw FormatError("error '" + text + "' names qubit " + digits + " outside 1.." + std::to_string(n));
        }
        out = multiply(out, PauliOperator::single(n, q - 1, token[0]));
    }
    return out.unsigned_part();
}

std::string sign_text(const std::vector<int> &signs) {
    std::string out;
    for (int s : signs) {
        out += s > 0 ? '+' : '-';
    }
    return out;
}

std::vector<int> parse_signs(const std::string &text, const std::string &what) {
    std::vector<int> out;
    for (char c : text) {
        if (c == '+') {
            out.push_back(1);
        } else if (c == '-') {
            out.push_back(-1);
        } else {
            throw FormatError(what + " ('" + text + "') must contain only '+' and '-'");
        }
    }
    return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(source + ": malformed JSON at " + line_context(text, e.byte) + ": " + e.what());
    }
}

CodeDocument parse_code_document(const json &doc, const std::string &source) {
    if (!doc.is_object()) {
        throw FormatError(source + ": code definition must be a JSON object");
    }
    const auto &n_value = require(doc, "n", source);
    if (!n_value.is_number_unsigned() || n_value.get<std::size_t>() == 0) {
        throw FormatError(source + ": 'n' must be a positive integer");
    }
    const auto n = n_value.get<std::size_t>();
    auto rows = parse_bit_list(require(doc, "adjacency", source), n, source + ": adjacency");
    if (rows.size() != n) {
        throw FormatError(source + ": adjacency has " + std::to_string(rows.size()) + " rows, expected " +
                          std::to_string(n));
    }
    auto words = parse_bit_list(require(doc, "codewords", source), n, source + ": codewords");
    CodeDocument out{doc.value("name", std::string()), CwsCode(BinaryMatrix(std::move(rows), n), std::move(words)),
                     std::nullopt};
    if (doc.contains("errors")) {
        out.errors = parse_error_list(doc.at("errors"), n);
    }
    return out;
}

CodeDocument load_code_file(const std::filesystem::path &path) {
    auto source = path.string();
    return parse_code_document(parse_json(read_text_file(path), source), source);
}

LabeledError parse_error_entry(const json &entry, std::size_t n) {
    std::string label;
    std::string text;
    if (entry.is_object()) {
        text = require_string(require(entry, "pauli", "error entry"), "error 'pauli'");
        label = entry.value("label", std::string());
    } else {
        text = require_string(entry, "error entry");
    }
    std::optional<PauliOperator> op = parse_sparse(text, n);
    if (op && label.empty()) {
        label = text;
    }
    if (!op) {
        try {
            op = PauliOperator::from_string(text);
        } catch (const std::invalid_argument &e) {
            throw FormatError(std::string("cannot parse error '") + text + "': " + e.what());
        }
        if (op->size() != n) {
            throw FormatError("error '" + text + "' acts on " + std::to_string(op->size()) + " qubits, expected " +
                              std::to_string(n));
        }
    }
    if (label.empty()) {
        label = default_label(*op);
    }
    return {label, std::move(*op)};
}

ErrorSet parse_error_list(const json &list, std::size_t n) {
    if (!list.is_array()) {
        throw FormatError("error list must be a JSON array");
    }
    std::vector<LabeledError> out;
    for (const auto &entry : list) {
        out.push_back(parse_error_entry(entry, n));
    }
    try {
        return ErrorSet(std::move(out));
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

ErrorSet load_error_file(const std::filesystem::path &path, std::size_t n) {
    auto doc = parse_json(read_text_file(path), path.string());
    if (doc.is_object()) {
        return parse_error_list(require(doc, "errors", path.string()), n);
    }
    return parse_error_list(doc, n);
}

std::string code_hash(const CwsCode &code) {
    auto text = code.canonical_text();
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::ostringstream out;
    for (unsigned int k = 0; k < length; ++k) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
    }
    return out.str();
}

std::string observable_name(std::size_t index) { return "A_" + std::to_string(index + 1); }

json plan_to_json(const DecodingPlan &plan, const CwsCode &code, const ErrorSet &errors) {
    json doc;
    doc["format"] = "cws-decoding-plan/1";
    doc["code_hash"] = code_hash(code);
    doc["mode"] = to_string(plan.mode);
    doc["complete"] = plan.complete();
    json error_list = json::array();
    for (const auto &e : errors) {
        error_list.push_back({{"label", e.label}, {"pauli", e.op.str()}});
    }
    doc["errors"] = std::move(error_list);
    json paulis = json::array();
    for (const auto &o : plan.pauli_observables) {
        paulis.push_back(o.str());
    }
    doc["pauli_observables"] = std::move(paulis);
    json type4 = json::array();
    for (std::size_t k = 0; k < plan.type4_observables.size(); ++k) {
        const auto &a = plan.type4_observables[k];
        type4.push_back({{"name", observable_name(k)},
                         {"v", a.v.str()},
                         {"v1", a.v1.str()},
                         {"v2", a.v2.str()},
                         {"uses", plan.use_count(k)}});
    }
    doc["type4_observables"] = std::move(type4);
    auto labels = [&](const std::vector<std::size_t> &members) {
        json out = json::array();
        for (auto i : members) {
            out.push_back(errors[i].label);
        }
        return out;
    };
    json classes = json::array();
    for (const auto &c : plan.classes) {
        json entry;
        entry["signs"] = c.syndrome.sign_string();
        entry["members"] = labels(c.syndrome.members);
        json steps = json::array();
        for (const auto &step : c.refinements) {
            steps.push_back({{"observable", observable_name(step.observable)},
                             {"members", labels(step.members)},
                             {"eigenvalues", sign_text(step.signs)},
                             {"reused", step.reused}});
        }
        entry["refinements"] = std::move(steps);
        json unresolved = json::array();
        for (const auto &u : c.unresolved) {
            unresolved.push_back({{"members", labels(u.members)}, {"search_space", u.search_space}});
        }
        entry["unresolved"] = std::move(unresolved);
        classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);
    return doc;
}

LoadedPlan plan_from_json(const json &doc, std::size_t n) {
    const std::string source = "plan";
    LoadedPlan out;
    out.code_hash = require_string(require(doc, "code_hash", source), "code_hash");
    out.errors = parse_error_list(require(doc, "errors", source), n);
    out.plan.mode = search_mode_from_string(require_string(require(doc, "mode", source), "mode"));
    out.plan.pauli_observables = parse_bit_list(require(doc, "pauli_observables", source), n, "pauli_observables");

    std::map<std::string, std::size_t> by_name;
    const auto &type4 = require(doc, "type4_observables", source);
    for (const auto &entry : type4) {
        auto name = require_string(require(entry, "name", source), "observable name");
        Type4Observable a{parse_bits(require(entry, "v", source), n, name + ".v"),
                          parse_bits(require(entry, "v1", source), n, name + ".v1"),
                          parse_bits(require(entry, "v2", source), n, name + ".v2")};
        by_name[name] = out.plan.type4_observables.size();
        out.plan.type4_observables.push_back(std::move(a));
    }
    auto indices = [&](const json &labels) {
        std::vector<std::size_t> members;
        for (const auto &l : labels) {
            auto label = require_string(l, "member label");
            try {
                members.push_back(out.errors.index_of(label));
            } catch (const std::out_of_range &) {
                throw FormatError("plan refers to unknown error '" + label + "'");
            }
        }
        return members;
    };
    for (const auto &entry : require(doc, "classes", source)) {
        ClassPlan c;
        c.syndrome.signs = parse_signs(require_string(require(entry, "signs", source), "signs"), "signs");
        c.syndrome.members = indices(require(entry, "members", source));
        for (const auto &step : entry.value("refinements", json::array())) {
            auto name = require_string(require(step, "observable", source), "observable");
            auto it = by_name.find(name);
            if (it == by_name.end()) {
                throw FormatError("plan refers to unknown observable '" + name + "'");
            }
            RefinementStep s;
            s.observable = it->second;
            s.members = indices(require(step, "members", source));
            s.signs = parse_signs(require_string(require(step, "eigenvalues", source), "eigenvalues"), "eigenvalues");
            s.reused = step.value("reused", false);
            if (s.signs.size() != s.members.size()) {
                throw FormatError("refinement for " + name + " lists " + std::to_string(s.members.size()) +
                                  " members but " + std::to_string(s.signs.size()) + " eigenvalues");
            }
            c.refinements.push_back(std::move(s));
        }
        for (const auto &u : entry.value("unresolved", json::array())) {
            c.unresolved.push_back({indices(require(u, "members", source)), u.value("search_space", std::uint64_t{0})});
        }
        out.plan.classes.push_back(std::move(c));
    }
    return out;
}

std::string render_sign_table(const DecodingPlan &plan, const ErrorSet &errors) {
    std::ostringstream out;
    for (const auto &c : plan.classes) {
        if (c.syndrome.members.size() < 2 && c.refinements.empty()) {
            continue;
        }
        std::size_t width = 4;
        for (auto i : c.syndrome.members) {
            width = std::max(width, errors[i].label.size() + 2);
        }
        out << c.syndrome.sign_string() << '\n';
        out << std::setw(6) << "";
        for (auto i : c.syndrome.members) {
            out << std::left << std::setw(static_cast<int>(width)) << errors[i].label;
        }
        out << '\n';
        for (const auto &step : c.refinements) {
            out << std::left << std::setw(6) << observable_name(step.observable);
            for (auto i : c.syndrome.members) {
                auto it = std::find(step.members.begin(), step.members.end(), i);
                char mark = '.';
                if (it != step.members.end()) {
                    mark = step.signs[static_cast<std::size_t>(it - step.members.begin())] > 0 ? '+' : '-';
                }
                out << std::left << std::setw(static_cast<int>(width)) << mark;
            }
            out << '\n';
        }
        for (const auto &u : c.unresolved) {
            out << "unresolved:";
            for (auto i : u.members) {
                out << ' ' << errors[i].label;
            }
            out << " (searched " << u.search_space << " pairs)\n";
        }
        out << '\n';
    }
    return out.str();
}

ExternalTable parse_external_table(const json &doc, std::size_t n) {
    const std::string source = "external table";
    ExternalTable out;
    out.pauli_observables = parse_bit_list(require(doc, "pauli_observables", source), n, "pauli_observables");
    for (const auto &entry : require(doc, "observables", source)) {
        auto name = require_string(require(entry, "name", source), "observable name");
        out.observables.push_back({name, Type4Observable{parse_bits(require(entry, "v", source), n, name + ".v"),
                                                         parse_bits(require(entry, "v1", source), n, name + ".v1"),
                                                         parse_bits(require(entry, "v2", source), n, name + ".v2")}});
    }
    for (const auto &entry : require(doc, "classes", source)) {
        ExternalTable::Entry e;
        e.signs = require_string(require(entry, "signs", source), "signs");
        parse_signs(e.signs, "signs");
        for (const auto &label : require(entry, "errors", source)) {
            e.errors.push_back(require_string(label, "error label"));
        }
        e.observable = require_string(require(entry, "observable", source), "observable");
        e.eigenvalues = require_string(require(entry, "eigenvalues", source), "eigenvalues");
        parse_signs(e.eigenvalues, "eigenvalues");
        if (e.eigenvalues.size() != e.errors.size()) {
            throw FormatError("class " + e.signs + " lists " + std::to_string(e.errors.size()) + " errors but " +
                              std::to_string(e.eigenvalues.size()) + " eigenvalues");
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace cws
