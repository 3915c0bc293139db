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

#include "cws/gf2.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cws {

namespace {

std::size_t num_words(std::size_t n) { return (n + 63) / 64; }

}  // namespace

BinaryVector::BinaryVector(std::size_t n) : size_(n), words_(num_words(n), 0) {}

BinaryVector BinaryVector::from_string(std::string_view text) {
    BinaryVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '1') {
            v.set(i, true);
        } else if (c != '0') {
            throw std::invalid_argument("binary vector '" + std::string(text) + "' has a character other than 0/1");
        }
    }
    return v;
}

BinaryVector BinaryVector::unit(std::size_t n, std::size_t index) {
    BinaryVector v(n);
    v.set(index, true);
    return v;
}

BinaryVector BinaryVector::from_index(std::size_t n, std::uint64_t value) {
    if (n >= 64) {
        throw std::invalid_argument("from_index needs fewer than 64 coordinates");
    }
    BinaryVector v(n);
    for (std::size_t q = 0; q < n; ++q) {
        if ((value >> (n - 1 - q)) & 1) {
            v.set(q, true);
        }
    }
    return v;
}

void BinaryVector::set(std::size_t index, bool value) {
    auto mask = std::uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

bool BinaryVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BinaryVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::size_t BinaryVector::leading_index() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return size_;
}

BinaryVector &BinaryVector::operator^=(const BinaryVector &other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("binary vector size mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BinaryVector &BinaryVector::operator&=(const BinaryVector &other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("binary vector size mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

std::strong_ordering BinaryVector::operator<=>(const BinaryVector &other) const {
    if (auto c = size_ <=> other.size_; c != 0) {
        return c;
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        auto diff = words_[k] ^ other.words_[k];
        if (diff) {
            // Lowest set bit of the word is the leftmost coordinate.
            auto bit = std::uint64_t{1} << std::countr_zero(diff);
            return (words_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::string BinaryVector::str() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

bool dot(const BinaryVector &a, const BinaryVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner product of vectors with different lengths");
    }
    auto wa = a.words();
    auto wb = b.words();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < wa.size(); ++k) {
        acc ^= wa[k] & wb[k];
    }
    return std::popcount(acc) & 1;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows, BinaryVector(cols)), cols_(cols) {}

BinaryMatrix::BinaryMatrix(std::vector<BinaryVector> rows)
    : BinaryMatrix(std::move(rows), std::size_t(-1)) {}

BinaryMatrix::BinaryMatrix(std::vector<BinaryVector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
    if (cols_ == std::size_t(-1)) {
        cols_ = rows_.empty() ? 0 : rows_.front().size();
    }
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("matrix rows have inconsistent lengths");
        }
    }
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_string(std::string_view text) {
    std::vector<BinaryVector> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            rows.push_back(BinaryVector::from_string(line));
        }
    }
    return BinaryMatrix(std::move(rows));
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool BinaryMatrix::is_symmetric() const { return rows() == cols_ && transposed() == *this; }

BinaryVector BinaryMatrix::operator*(const BinaryVector &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector size mismatch");
    }
    BinaryVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (dot(rows_[r], v)) {
            out.set(r, true);
        }
    }
    return out;
}

std::string BinaryMatrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

namespace {

// Gauss-Jordan elimination; `companion` receives the same row operations.
EchelonForm eliminate(BinaryMatrix m, BinaryMatrix *companion) {
    std::vector<BinaryVector> rows(m.row_span().begin(), m.row_span().end());
    std::vector<BinaryVector> side;
    if (companion) {
        side.assign(companion->row_span().begin(), companion->row_span().end());
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][c]) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        if (companion) {
            std::swap(side[r], side[p]);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c]) {
                rows[i] ^= rows[r];
                if (companion) {
                    side[i] ^= side[r];
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    if (companion) {
        *companion = BinaryMatrix(std::move(side), companion->cols());
    }
    return {BinaryMatrix(std::move(rows), m.cols()), std::move(pivots)};
}

std::vector<BinaryVector> kernel_from_rref(const EchelonForm &e) {
    const auto n = e.reduced.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BinaryVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        auto v = BinaryVector::unit(n, f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (e.reduced.get(r, f)) {
                v.set(e.pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

EchelonForm rref(const BinaryMatrix &m) { return eliminate(m, nullptr); }

std::size_t rank(const BinaryMatrix &m) { return rref(m).pivots.size(); }

std::vector<BinaryVector> kernel_basis(const BinaryMatrix &m) { return kernel_from_rref(rref(m)); }

LinearSystem::LinearSystem(const BinaryMatrix &m) : rows_(m.rows()), cols_(m.cols()) {
    transform_ = BinaryMatrix::identity(m.rows());
    auto e = eliminate(m, &transform_);
    reduced_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
    kernel_ = kernel_from_rref({reduced_, pivots_});

    // Fully reduce the kernel basis by leading coordinate.
    std::vector<BinaryVector> rows = kernel_;
    std::vector<BinaryVector> echelon;
    for (std::size_t c = 0; c < cols_; ++c) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const BinaryVector &v) { return v[c]; });
        if (it == rows.end()) {
            continue;
        }
        BinaryVector pivot = *it;
        rows.erase(it);
        for (auto &v : rows) {
            if (v[c]) {
                v ^= pivot;
            }
        }
        for (auto &v : echelon) {
            if (v[c]) {
                v ^= pivot;
            }
        }
        echelon.push_back(std::move(pivot));
    }
    kernel_echelon_ = std::move(echelon);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        row_space_.push_back(reduced_.row(r));
    }
}

BinaryVector LinearSystem::coset_minimum(BinaryVector v) const {
    for (const auto &b : kernel_echelon_) {
        if (v[b.leading_index()]) {
            v ^= b;
        }
    }
    return v;
}

std::optional<BinaryVector> LinearSystem::solve_particular(const BinaryVector &rhs) const {
    if (rhs.size() != rows_) {
        throw std::invalid_argument("right-hand side length " + std::to_string(rhs.size()) +
                                    " does not match row count " + std::to_string(rows_));
    }
    auto y = transform_ * rhs;
    for (std::size_t r = pivots_.size(); r < rows_; ++r) {
        if (y[r]) {
            return std::nullopt;
        }
    }
    BinaryVector x(cols_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        if (y[r]) {
            x.set(pivots_[r], true);
        }
    }
    return coset_minimum(std::move(x));
}

std::optional<Solution> LinearSystem::solve(const BinaryVector &rhs) const {
    auto x = solve_particular(rhs);
    if (!x) {
        return std::nullopt;
    }
    return Solution{std::move(*x), kernel_};
}

bool LinearSystem::in_kernel(const BinaryVector &v) const {
    for (const auto &r : row_space_) {
        if (dot(r, v)) {
            return false;
        }
    }
    return true;
}

std::optional<Solution> solve(const BinaryMatrix &m, const BinaryVector &rhs) { return LinearSystem(m).solve(rhs); }

std::vector<BinaryVector> enumerate_span(std::span<const BinaryVector> basis, std::size_t n) {
    if (basis.size() >= 31) {
        throw std::invalid_argument("span too large to enumerate");
    }
    std::vector<BinaryVector> out;
    out.reserve(std::size_t{1} << basis.size());
    out.emplace_back(n);
    for (const auto &b : basis) {
        const auto count = out.size();
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(out[i] ^ b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cws
