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
#include <span>
#include <string>
#include <string_view>

#include "cws/gf2.h"

namespace cws {

/// An n-qubit Pauli operator i^k * P_1 (x) ... (x) P_n.
///
/// Each tensor factor is one of I, X, Y, Z as a matrix, with Y = iXZ. The
/// factor on qubit q is given by (x_part[q], z_part[q]): (1,0)=X, (0,1)=Z,
/// (1,1)=Y. The scalar i^k is tracked exactly through `log_i` in 0..3.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n);
    PauliOperator(BinaryVector x_part, BinaryVector z_part, std::uint8_t log_i = 0);

    /// Parses "XZIIZ", "-YY", "+iXZ", "-iXZII". Throws std::invalid_argument.
    static PauliOperator from_string(std::string_view text);
    /// Single-qubit operator `letter` (one of XYZ) on zero-based qubit `q`.
    static PauliOperator single(std::size_t n, std::size_t q, char letter);

    std::size_t size() const { return x_.size(); }
    const BinaryVector &x_part() const { return x_; }
    const BinaryVector &z_part() const { return z_; }
    std::uint8_t log_i() const { return log_i_; }
    char letter(std::size_t q) const;
    bool is_identity() const { return x_.none() && z_.none(); }

    /// Same operator without the scalar prefactor.
    PauliOperator unsigned_part() const { return {x_, z_, 0}; }

    bool operator==(const PauliOperator &other) const = default;
    std::string str() const;

   private:
    BinaryVector x_;
    BinaryVector z_;
    std::uint8_t log_i_ = 0;
};

/// Exact product p*q. Throws std::invalid_argument on size mismatch.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
inline PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) { return multiply(p, q); }

/// Symplectic product <x_p,z_q> + <z_p,x_q>; zero iff p and q commute.
bool symplectic_product(const PauliOperator &p, const PauliOperator &q);
inline bool commutes(const PauliOperator &p, const PauliOperator &q) { return !symplectic_product(p, q); }

std::size_t weight(const PauliOperator &p);

/// s_1^{v_1} s_2^{v_2} ... s_n^{v_n}, multiplied in ascending generator order.
///
/// Throws std::invalid_argument when sizes disagree or when two generators
/// do not commute.
PauliOperator stabilizer_element(std::span<const PauliOperator> generators, const BinaryVector &v);

}  // namespace cws
