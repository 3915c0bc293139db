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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cws/gf2.h"
#include "cws/pauli.h"

namespace cws {

class CodeError : public std::invalid_argument {
   public:
    enum class Kind {
        kNotSquare,
        kNotSymmetric,
        kNonzeroDiagonal,
        kWrongCodewordLength,
        kMissingZeroCodeword,
        kDuplicateCodeword,
        kGeneratorsAnticommute,
    };

    CodeError(Kind kind, const std::string &what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

   private:
    Kind kind_;
};

/// A codeword-stabilized code in standard form.
///
/// The graph adjacency M fixes the stabilizer generators s_i = X_i Z^{r_i}
/// (r_i the i-th row of M); the classical codewords C_j fix the word
/// operators W_j = Z^{C_j}, with C_1 = 0.
class CwsCode {
   public:
    /// Validates every invariant and throws CodeError naming the first one
    /// violated.
    CwsCode(BinaryMatrix adjacency, std::vector<BinaryVector> codewords);

    std::size_t n() const { return adjacency_.rows(); }
    std::size_t k() const { return codewords_.size(); }
    const BinaryMatrix &adjacency() const { return adjacency_; }
    const std::vector<BinaryVector> &codewords() const { return codewords_; }
    const std::vector<PauliOperator> &generators() const { return generators_; }
    /// K x n matrix with row i equal to C_i.
    const BinaryMatrix &codeword_matrix() const { return codeword_matrix_; }
    /// Factorization of the codeword matrix, shared by all solvers.
    const LinearSystem &codeword_system() const { return codeword_system_; }

    /// Canonical text form used for hashing: n, adjacency rows, codewords.
    std::string canonical_text() const;

   private:
    BinaryMatrix adjacency_;
    std::vector<BinaryVector> codewords_;
    std::vector<PauliOperator> generators_;
    BinaryMatrix codeword_matrix_;
    LinearSystem codeword_system_;
};

inline CwsCode build_code(BinaryMatrix adjacency, std::vector<BinaryVector> codewords) {
    return CwsCode(std::move(adjacency), std::move(codewords));
}

inline const BinaryMatrix &codeword_matrix(const CwsCode &code) { return code.codeword_matrix(); }

struct LabeledError {
    std::string label;
    PauliOperator op;
};

/// Ordered list of Pauli errors with unique labels.
class ErrorSet {
   public:
    ErrorSet() = default;
    /// Throws std::invalid_argument on duplicate labels or mixed qubit counts.
    explicit ErrorSet(std::vector<LabeledError> errors);

    /// X_1, Y_1, Z_1, X_2, ... (3n errors), optionally preceded by "I".
    static ErrorSet single_qubit(std::size_t n, bool include_identity);

    std::size_t size() const { return errors_.size(); }
    bool empty() const { return errors_.empty(); }
    const LabeledError &operator[](std::size_t i) const { return errors_[i]; }
    const std::vector<LabeledError> &items() const { return errors_; }
    auto begin() const { return errors_.begin(); }
    auto end() const { return errors_.end(); }

    /// Index of the error with this label; throws std::out_of_range.
    std::size_t index_of(const std::string &label) const;
    ErrorSet subset(const std::vector<std::size_t> &indices) const;

   private:
    std::vector<LabeledError> errors_;
};

/// "X_3" for weight-one operators, "I" for the identity, otherwise the
/// Pauli string itself.
std::string default_label(const PauliOperator &p);

/// Cl_S(Z^V X^U) = V + M U. The scalar phase of `e` is discarded.
BinaryVector classicalize(const CwsCode &code, const PauliOperator &e);

enum class Detection {
    kDetected,
    kDegeneratePass,  // Cl_S(e) = 0 and e commutes with every Z^{C_j}
    kDegenerateFail,  // Cl_S(e) = 0 but e anticommutes with some Z^{C_j}
    kCollision,       // C_i + Cl_S(e) = C_j for some i != j
};

struct DetectionResult {
    Detection status = Detection::kDetected;
    BinaryVector classical;
    // For kCollision: zero-based codeword indices with C_i + Cl_S(e) = C_j.
    // For kDegenerateFail: first codeword index that anticommutes.
    std::size_t first = 0;
    std::size_t second = 0;

    bool detected() const { return status == Detection::kDetected || status == Detection::kDegeneratePass; }
    std::string describe() const;
};

DetectionResult detects(const CwsCode &code, const PauliOperator &e);

}  // namespace cws
