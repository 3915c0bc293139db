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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cws/code.h"
#include "cws/gf2.h"
#include "cws/pauli.h"

namespace cws {

/// A = S^V * (1/2)(-I + S^{V1} + S^{V2} + S^{V1+V2}).
///
/// Every involution in the real group algebra of S with exactly four terms
/// has this form up to an overall sign; the sign is fixed to +1 here since
/// -A carries the same information with every eigenvalue flipped.
struct Type4Observable {
    BinaryVector v;
    BinaryVector v1;
    BinaryVector v2;

    /// Throws std::invalid_argument unless v1 != v2, both are nonzero and
    /// all three have the same length.
    static Type4Observable make(BinaryVector v, BinaryVector v1, BinaryVector v2);

    bool has_valid_form() const;
    bool operator==(const Type4Observable &other) const = default;
};

/// Basis of ker(C); S^{O} for O in the basis generate N_S(W).
std::vector<BinaryVector> pauli_normalizer_generators(const CwsCode &code);

/// The correction F(g) that appears when g is commuted past S^{(V1,V2)}:
/// V1+V2 if g anticommutes with both S^{V1} and S^{V2}, V1 if only with
/// S^{V2}, V2 if only with S^{V1}, and 0 otherwise.
///
/// Evaluated by building S^{V1}, S^{V2} as Pauli operators.
BinaryVector f_map(const BinaryVector &v1, const BinaryVector &v2, const PauliOperator &g, const CwsCode &code);

/// Same map computed from c = Cl_S(g), using that S^{V} and g anticommute
/// iff <V, Cl_S(g)> = 1 (M is symmetric).
BinaryVector f_map_classical(const BinaryVector &v1, const BinaryVector &v2, const BinaryVector &classical);

/// p_i = <C_i,V1> OR <C_i,V2> for every codeword.
BinaryVector stabilization_rhs(const CwsCode &code, const BinaryVector &v1, const BinaryVector &v2);

/// A fixes every codeword state iff C * v = p.
bool stabilizes(const CwsCode &code, const Type4Observable &a);

/// True iff for every error E, C * (v + F(E)) = p. Then each E W_j|psi>
/// is an eigenvector of A with an eigenvalue that does not depend on j.
bool is_decoding_observable(const CwsCode &code, const ErrorSet &errors, const Type4Observable &a);

/// Eigenvalue of A on every E W_j|psi>: m * (-1)^{[F(E) != 0]} with
/// S^V E = m E S^V. Throws std::domain_error if A leaks information on e.
int eigenvalue_on_error(const CwsCode &code, const Type4Observable &a, const PauliOperator &e);

struct SyndromeClass {
    std::vector<int> signs;             // +1/-1 per Pauli observable
    std::vector<std::size_t> members;   // indices into the error set

    std::string sign_string() const;
};

/// Groups errors by the sign vector ((-1)^{<O_j, Cl_S(E)>})_j. Classes are
/// ordered by sign vector, '+' before '-', coordinate 1 first; members keep
/// input order.
std::vector<SyndromeClass> pauli_syndrome_partition(const CwsCode &code, const ErrorSet &errors,
                                                    const std::vector<BinaryVector> &observables);

/// Kernel basis of the matrix whose rows are Cl_S(E) for E in the subset.
std::vector<BinaryVector> error_normalizer_basis(const CwsCode &code, const ErrorSet &subset);
/// Every V with S^V commuting with all errors in the subset, sorted.
std::vector<BinaryVector> error_normalizer_elements(const CwsCode &code, const ErrorSet &subset);

enum class SearchMode {
    kCorollary,   // V1, V2 restricted to N_S(subset)
    kExhaustive,  // every pair V1 < V2 in F_2^n, full decoding condition
};

std::string to_string(SearchMode mode);
SearchMode search_mode_from_string(const std::string &text);

struct SearchOptions {
    SearchMode mode = SearchMode::kCorollary;
    unsigned threads = 1;
};

struct SearchResult {
    std::optional<Type4Observable> observable;
    std::uint64_t search_space = 0;  // number of (V1,V2) pairs in scope
};

/// First type-4 decoding observable, in ascending (V1, V2) order, whose
/// eigenvalues over the subset are not all equal. V is the smallest
/// solution of the stabilization system. The result does not depend on
/// the thread count. Throws std::invalid_argument if the subset has fewer
/// than two errors.
SearchResult search_type4(const CwsCode &code, const ErrorSet &subset, const SearchOptions &options = {});

struct RefinementStep {
    std::size_t observable = 0;        // index into DecodingPlan::type4_observables
    std::vector<std::size_t> members;  // error indices this measurement is applied to
    std::vector<int> signs;            // expected eigenvalue per member
    bool reused = false;               // taken from an earlier class
};

struct UnresolvedSet {
    std::vector<std::size_t> members;
    std::uint64_t search_space = 0;
};

struct ClassPlan {
    SyndromeClass syndrome;
    std::vector<RefinementStep> refinements;
    std::vector<UnresolvedSet> unresolved;
};

struct DecodingPlan {
    SearchMode mode = SearchMode::kCorollary;
    std::vector<BinaryVector> pauli_observables;
    std::vector<Type4Observable> type4_observables;
    std::vector<ClassPlan> classes;

    bool complete() const;
    /// Number of refinement steps that measure observable `index`.
    std::size_t use_count(std::size_t index) const;
};

class UndetectableError : public std::invalid_argument {
   public:
    UndetectableError(std::string label, const std::string &what)
        : std::invalid_argument(what), label_(std::move(label)) {}
    const std::string &label() const { return label_; }

   private:
    std::string label_;
};

/// Pauli layer from ker(C), syndrome classes, then type-4 refinements per
/// class. Earlier observables are tried on each new subset before a fresh
/// search. Subsets whose members share one Cl_S image need no further
/// splitting. Throws UndetectableError for the first undetected error.
DecodingPlan build_decoding_plan(const CwsCode &code, const ErrorSet &errors, const SearchOptions &options = {});

}  // namespace cws
