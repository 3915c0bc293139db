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

// Dense state-vector oracle.
//
// Nothing here calls the algebraic criteria in observables.h or the Pauli
// product in pauli.h: states are explicit amplitude arrays and operators
// are applied as explicit linear maps, generator by generator.

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cws/code.h"
#include "cws/gf2.h"
#include "cws/observables.h"
#include "cws/pauli.h"

namespace cws {

inline constexpr std::size_t kDefaultOracleCap = 14;
inline constexpr double kEigenTolerance = 1e-10;
inline constexpr double kNormTolerance = 1e-12;

/// CWS_ORACLE_CAP if set to a positive integer, else kDefaultOracleCap.
std::size_t oracle_cap_from_env();

class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Amplitudes over the computational basis. Qubit 1 is the most
/// significant bit of the basis index.
struct StateVector {
    std::size_t n = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm() const;
};

/// Real combination sum_V alpha_V S^V over the stabilizer group.
class GroupAlgebraElement {
   public:
    GroupAlgebraElement() = default;

    static GroupAlgebraElement from_type4(const Type4Observable &a);

    /// Adds `coefficient` to the term S^v; zero results are dropped.
    void add(const BinaryVector &v, double coefficient);
    const std::map<BinaryVector, double> &terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }

   private:
    std::map<BinaryVector, double> terms_;
};

/// Graph state: amplitude (-1)^{edges inside support(x)} / sqrt(2^n).
/// Throws ResourceError when n exceeds `cap`.
StateVector graph_state(const CwsCode &code, std::size_t cap = kDefaultOracleCap);

StateVector apply(const PauliOperator &op, const StateVector &state);
/// Applies s_i = X_i Z^{r_i} for every i with v_i = 1.
StateVector apply_stabilizer(const CwsCode &code, const BinaryVector &v, const StateVector &state);
StateVector apply(const GroupAlgebraElement &a, const CwsCode &code, const StateVector &state);

/// Coefficient test for A^2 = I: sum alpha_V^2 = 1 and, for every U != 0,
/// sum_V alpha_V alpha_{V+U} = 0.
bool is_involution(const GroupAlgebraElement &a, double tolerance = kNormTolerance);

/// lambda in {+1,-1} with A s = lambda s, or nullopt when s is not an
/// eigenvector (information leaks on measurement).
std::optional<int> eigencheck(const GroupAlgebraElement &a, const CwsCode &code, const StateVector &state,
                              double tolerance = kEigenTolerance);
std::optional<int> eigencheck(const Type4Observable &a, const CwsCode &code, const StateVector &state,
                              double tolerance = kEigenTolerance);

/// Codeword basis states W_j|psi> = Z^{C_j}|psi>.
std::vector<StateVector> codeword_states(const CwsCode &code, const StateVector &psi);

/// Common eigenvalue of A on E W_j|psi> over all j, or nullopt if any of
/// them is not an eigenvector or the eigenvalues differ.
std::optional<int> oracle_eigenvalue(const Type4Observable &a, const CwsCode &code,
                                     const std::vector<StateVector> &words, const PauliOperator &e);

/// A Z^{C_j}|psi> = Z^{C_j}|psi> for every j.
bool oracle_stabilizes(const Type4Observable &a, const CwsCode &code, const std::vector<StateVector> &words);

/// Knill-Laflamme detection test: <psi_i|E|psi_j> = c delta_ij.
bool oracle_detects(const std::vector<StateVector> &words, const PauliOperator &e);

// Dense 2^n x 2^n matrices for small n.
Eigen::MatrixXcd dense_matrix(const PauliOperator &op);
Eigen::MatrixXcd dense_generator(const CwsCode &code, std::size_t i);
Eigen::MatrixXcd dense_stabilizer(const CwsCode &code, const BinaryVector &v);
Eigen::MatrixXcd dense_matrix(const GroupAlgebraElement &a, const CwsCode &code);

}  // namespace cws
