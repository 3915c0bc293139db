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

#include "cws/pauli.h"

#include <bit>
#include <stdexcept>

namespace cws {

PauliOperator::PauliOperator(std::size_t n) : x_(n), z_(n) {}

PauliOperator::PauliOperator(BinaryVector x_part, BinaryVector z_part, std::uint8_t log_i)
    : x_(std::move(x_part)), z_(std::move(z_part)), log_i_(log_i & 3) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("Pauli x and z parts differ in length");
    }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    std::uint8_t log_i = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            log_i = 2;
        }
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        log_i = (log_i + 1) & 3;
        ++pos;
    }
    auto body = text.substr(pos);
    if (body.empty()) {
        throw std::invalid_argument("empty Pauli string '" + std::string(text) + "'");
    }
    PauliOperator p(body.size());
    p.log_i_ = log_i;
    for (std::size_t q = 0; q < body.size(); ++q) {
        switch (body[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x_.set(q, true);
                break;
            case 'Z':
                p.z_.set(q, true);
                break;
            case 'Y':
                p.x_.set(q, true);
                p.z_.set(q, true);
                break;
            default:
                throw std::invalid_argument("Pauli string '" + std::string(text) + "' has an invalid character");
        }
    }
    return p;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char letter) {
    if (q >= n) {
        throw std::invalid_argument("qubit index out of range");
    }
    PauliOperator p(n);
    switch (letter) {
        case 'X':
            p.x_.set(q, true);
            break;
        case 'Z':
            p.z_.set(q, true);
            break;
        case 'Y':
            p.x_.set(q, true);
            p.z_.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
    return p;
}

char PauliOperator::letter(std::size_t q) const { return "IXZY"[x_[q] + 2 * z_[q]]; }

std::string PauliOperator::str() const {
    static constexpr const char *kPrefix[4] = {"", "i", "-", "-i"};
    std::string out = kPrefix[log_i_];
    for (std::size_t q = 0; q < size(); ++q) {
        out += letter(q);
    }
    return out;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("Pauli size mismatch: " + std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()));
    }
    // Per qubit: (i^{x1 z1} X^x1 Z^z1)(i^{x2 z2} X^x2 Z^z2)
    //   = i^{x1 z1 + x2 z2 + 2 z1 x2 - x3 z3} (i^{x3 z3} X^x3 Z^z3).
    auto x = p.x_part() ^ q.x_part();
    auto z = p.z_part() ^ q.z_part();
    auto px = p.x_part().words();
    auto pz = p.z_part().words();
    auto qx = q.x_part().words();
    auto qz = q.z_part().words();
    auto rx = x.words();
    auto rz = z.words();
    std::int64_t acc = p.log_i() + q.log_i();
    for (std::size_t k = 0; k < px.size(); ++k) {
        acc += std::popcount(px[k] & pz[k]);
        acc += std::popcount(qx[k] & qz[k]);
        acc += 2 * std::popcount(pz[k] & qx[k]);
        acc -= std::popcount(rx[k] & rz[k]);
    }
    auto log_i = static_cast<std::uint8_t>(((acc % 4) + 4) % 4);
    return PauliOperator(std::move(x), std::move(z), log_i);
}

bool symplectic_product(const PauliOperator &p, const PauliOperator &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("Pauli size mismatch: " + std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()));
    }
    return dot(p.x_part(), q.z_part()) ^ dot(p.z_part(), q.x_part());
}

std::size_t weight(const PauliOperator &p) {
    auto xs = p.x_part().words();
    auto zs = p.z_part().words();
    std::size_t total = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        total += std::popcount(xs[k] | zs[k]);
    }
    return total;
}

PauliOperator stabilizer_element(std::span<const PauliOperator> generators, const BinaryVector &v) {
    if (generators.size() != v.size()) {
        throw std::invalid_argument("exponent vector length does not match generator count");
    }
    if (generators.empty()) {
        return PauliOperator(0);
    }
    const auto n = generators.front().size();
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != n) {
            throw std::invalid_argument("generators act on different qubit counts");
        }
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw std::invalid_argument("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                            " do not commute");
            }
        }
    }
    PauliOperator out(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) {
            out = multiply(out, generators[i]);
        }
    }
    return out;
}

}  // namespace cws
