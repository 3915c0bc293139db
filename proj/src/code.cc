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

#include "cws/code.h"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cws {

CwsCode::CwsCode(BinaryMatrix adjacency, std::vector<BinaryVector> codewords)
    : adjacency_(std::move(adjacency)), codewords_(std::move(codewords)) {
    using Kind = CodeError::Kind;
    const auto n = adjacency_.rows();
    if (adjacency_.cols() != n) {
        throw CodeError(Kind::kNotSquare, "adjacency matrix is " + std::to_string(n) + "x" +
                                              std::to_string(adjacency_.cols()) + ", expected square");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency_.get(i, i)) {
            throw CodeError(Kind::kNonzeroDiagonal,
                            "adjacency matrix has a self-loop at vertex " + std::to_string(i + 1));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (adjacency_.get(i, j) != adjacency_.get(j, i)) {
                throw CodeError(Kind::kNotSymmetric, "adjacency matrix is not symmetric at (" + std::to_string(i + 1) +
                                                         "," + std::to_string(j + 1) + ")");
            }
        }
    }
    for (std::size_t j = 0; j < codewords_.size(); ++j) {
        if (codewords_[j].size() != n) {
            throw CodeError(Kind::kWrongCodewordLength, "codeword " + std::to_string(j + 1) + " has length " +
                                                            std::to_string(codewords_[j].size()) + ", expected " +
                                                            std::to_string(n));
        }
    }
    if (codewords_.empty() || codewords_.front().any()) {
        throw CodeError(Kind::kMissingZeroCodeword, "first codeword must be the all-zero word");
    }
    std::set<BinaryVector> seen;
    for (std::size_t j = 0; j < codewords_.size(); ++j) {
        if (!seen.insert(codewords_[j]).second) {
            throw CodeError(Kind::kDuplicateCodeword,
                            "codeword " + std::to_string(j + 1) + " (" + codewords_[j].str() + ") is repeated");
        }
    }

    generators_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        generators_.emplace_back(BinaryVector::unit(n, i), adjacency_.row(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!commutes(generators_[i], generators_[j])) {
                throw CodeError(Kind::kGeneratorsAnticommute,
                                "generators s_" + std::to_string(i + 1) + " and s_" + std::to_string(j + 1) +
                                    " anticommute");
            }
        }
    }
    codeword_matrix_ = BinaryMatrix(codewords_, n);
    codeword_system_ = LinearSystem(codeword_matrix_);
}

std::string CwsCode::canonical_text() const {
    std::string out = "n=" + std::to_string(n()) + "\nadjacency\n" + adjacency_.str() + "codewords\n";
    for (const auto &c : codewords_) {
        out += c.str();
        out += '\n';
    }
    return out;
}

ErrorSet::ErrorSet(std::vector<LabeledError> errors) : errors_(std::move(errors)) {
    std::unordered_set<std::string> labels;
    for (const auto &e : errors_) {
        if (!labels.insert(e.label).second) {
            throw std::invalid_argument("duplicate error label '" + e.label + "'");
        }
        if (e.op.size() != errors_.front().op.size()) {
            throw std::invalid_argument("error '" + e.label + "' acts on a different number of qubits");
        }
    }
}

ErrorSet ErrorSet::single_qubit(std::size_t n, bool include_identity) {
    std::vector<LabeledError> out;
    if (include_identity) {
        out.push_back({"I", PauliOperator(n)});
    }
    for (std::size_t q = 0; q < n; ++q) {
        for (char letter : {'X', 'Y', 'Z'}) {
            auto p = PauliOperator::single(n, q, letter);
            out.push_back({default_label(p), std::move(p)});
        }
    }
    return ErrorSet(std::move(out));
}

std::size_t ErrorSet::index_of(const std::string &label) const {
    for (std::size_t i = 0; i < errors_.size(); ++i) {
        if (errors_[i].label == label) {
            return i;
        }
    }
    throw std::out_of_range("no error labelled '" + label + "'");
}

ErrorSet ErrorSet::subset(const std::vector<std::size_t> &indices) const {
    std::vector<LabeledError> out;
    out.reserve(indices.size());
    for (auto i : indices) {
        out.push_back(errors_.at(i));
    }
    return ErrorSet(std::move(out));
}

std::string default_label(const PauliOperator &p) {
    auto w = weight(p);
    if (w == 0) {
        return "I";
    }
    if (w == 1) {
        for (std::size_t q = 0; q < p.size(); ++q) {
            if (p.letter(q) != 'I') {
                return std::string(1, p.letter(q)) + "_" + std::to_string(q + 1);
            }
        }
    }
    return p.unsigned_part().str();
}

BinaryVector classicalize(const CwsCode &code, const PauliOperator &e) {
    if (e.size() != code.n()) {
        throw std::invalid_argument("error acts on " + std::to_string(e.size()) + " qubits, code has " +
                                    std::to_string(code.n()));
    }
    return e.z_part() ^ (code.adjacency() * e.x_part());
}

std::string DetectionResult::describe() const {
    switch (status) {
        case Detection::kDetected:
            return "detected";
        case Detection::kDegeneratePass:
            return "degenerate-pass";
        case Detection::kDegenerateFail:
            return "undetected: Cl_S = 0 but anticommutes with codeword operator " + std::to_string(first + 1);
        case Detection::kCollision:
            return "undetected: maps codeword " + std::to_string(first + 1) + " onto codeword " +
                   std::to_string(second + 1);
    }
    return "unknown";
}

DetectionResult detects(const CwsCode &code, const PauliOperator &e) {
    DetectionResult r;
    r.classical = classicalize(code, e);
    const auto &words = code.codewords();
    if (r.classical.none()) {
        // e is a stabilizer element up to phase, namely S^U with U = x_part(e).
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (dot(words[j], e.x_part())) {
                r.status = Detection::kDegenerateFail;
                r.first = j;
                return r;
            }
        }
        r.status = Detection::kDegeneratePass;
        return r;
    }
    std::set<BinaryVector> word_set(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto shifted = words[i] ^ r.classical;
        if (word_set.contains(shifted)) {
            r.status = Detection::kCollision;
            r.first = i;
            r.second = static_cast<std::size_t>(std::find(words.begin(), words.end(), shifted) - words.begin());
            return r;
        }
    }
    return r;
}

}  // namespace cws
