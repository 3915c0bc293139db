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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cws {

/// Dense vector over GF(2).
///
/// Coordinate 0 is the leftmost character of the string form ("qubit 1" in
/// the usual one-based notation). Ordering compares coordinate 0 first, so
/// the string "0110" sorts like the big-endian integer 0b0110.
class BinaryVector {
   public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t n);

    /// Parses a string over {0,1}. Throws std::invalid_argument otherwise.
    static BinaryVector from_string(std::string_view text);
    static BinaryVector unit(std::size_t n, std::size_t index);
    /// Coordinate q takes bit (n-1-q) of `value`, so increasing `value`
    /// enumerates vectors in lexicographic order. Requires n < 64.
    static BinaryVector from_index(std::size_t n, std::uint64_t value);

    std::size_t size() const { return size_; }
    bool operator[](std::size_t index) const { return get(index); }
    bool get(std::size_t index) const { return (words_[index >> 6] >> (index & 63)) & 1; }
    void set(std::size_t index, bool value);
    void flip(std::size_t index) { words_[index >> 6] ^= std::uint64_t{1} << (index & 63); }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t popcount() const;
    /// Index of the leftmost set coordinate, or size() if the vector is zero.
    std::size_t leading_index() const;

    BinaryVector &operator^=(const BinaryVector &other);
    friend BinaryVector operator^(BinaryVector a, const BinaryVector &b) {
        a ^= b;
        return a;
    }
    BinaryVector &operator&=(const BinaryVector &other);
    friend BinaryVector operator&(BinaryVector a, const BinaryVector &b) {
        a &= b;
        return a;
    }

    bool operator==(const BinaryVector &other) const = default;
    std::strong_ordering operator<=>(const BinaryVector &other) const;

    std::string str() const;
    std::span<const std::uint64_t> words() const { return words_; }

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Inner product <a,b> over GF(2).
bool dot(const BinaryVector &a, const BinaryVector &b);

/// Row-major matrix over GF(2); each row is a BinaryVector of length cols().
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);
    /// Throws std::invalid_argument when rows have unequal lengths.
    explicit BinaryMatrix(std::vector<BinaryVector> rows);
    /// Every row must have length `cols`; allows a 0-row matrix with known width.
    BinaryMatrix(std::vector<BinaryVector> rows, std::size_t cols);

    static BinaryMatrix identity(std::size_t n);
    /// Newline-separated rows of 0/1 characters.
    static BinaryMatrix from_string(std::string_view text);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    void set(std::size_t r, std::size_t c, bool value) { rows_[r].set(c, value); }
    const BinaryVector &row(std::size_t r) const { return rows_[r]; }
    std::span<const BinaryVector> row_span() const { return rows_; }

    BinaryMatrix transposed() const;
    bool is_symmetric() const;
    /// Matrix-vector product. Throws std::invalid_argument on size mismatch.
    BinaryVector operator*(const BinaryVector &v) const;

    bool operator==(const BinaryMatrix &other) const = default;
    std::string str() const;

   private:
    std::vector<BinaryVector> rows_;
    std::size_t cols_ = 0;
};

struct EchelonForm {
    BinaryMatrix reduced;
    std::vector<std::size_t> pivots;  // zero-based column index per nonzero row
};

EchelonForm rref(const BinaryMatrix &m);
std::size_t rank(const BinaryMatrix &m);

/// Canonical kernel basis: one vector per free column of the RREF, in
/// ascending free-column order, with that free coordinate set to 1.
std::vector<BinaryVector> kernel_basis(const BinaryMatrix &m);

struct Solution {
    BinaryVector particular;
    std::vector<BinaryVector> kernel;
};

/// Factorization of a fixed matrix for repeated right-hand sides.
///
/// solve() returns the lexicographically smallest solution together with the
/// canonical kernel basis, or nullopt when the system is inconsistent.
class LinearSystem {
   public:
    LinearSystem() = default;
    explicit LinearSystem(const BinaryMatrix &m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    const std::vector<BinaryVector> &kernel() const { return kernel_; }

    std::optional<Solution> solve(const BinaryVector &rhs) const;
    /// Only the particular solution; avoids copying the kernel in hot loops.
    std::optional<BinaryVector> solve_particular(const BinaryVector &rhs) const;
    /// True when m * v == 0.
    bool in_kernel(const BinaryVector &v) const;
    /// Lexicographically smallest element of the coset v + ker(m).
    BinaryVector coset_minimum(BinaryVector v) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    BinaryMatrix reduced_;
    BinaryMatrix transform_;  // transform_ * m == reduced_
    std::vector<std::size_t> pivots_;
    std::vector<BinaryVector> kernel_;
    // Kernel basis in fully reduced echelon form by leading coordinate.
    std::vector<BinaryVector> kernel_echelon_;
    std::vector<BinaryVector> row_space_;
};

std::optional<Solution> solve(const BinaryMatrix &m, const BinaryVector &rhs);

/// All 2^k elements of span(basis), sorted lexicographically. Requires k < 31.
std::vector<BinaryVector> enumerate_span(std::span<const BinaryVector> basis, std::size_t n);

}  // namespace cws
