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

#include "cws/verify.h"

#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

namespace cws {

namespace {

using Complex = std::complex<double>;

std::uint64_t qubit_mask(std::size_t n, std::size_t q) { return std::uint64_t{1} << (n - 1 - q); }

std::uint64_t to_mask(const BinaryVector &v) {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < v.size(); ++q) {
        if (v[q]) {
            m |= qubit_mask(v.size(), q);
        }
    }
    return m;
}

void require_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("operator acts on " + std::to_string(a) + " qubits, state has " +
                                    std::to_string(b));
    }
}

// i^k * X^{x} Z^{z} with Z applied first.
StateVector apply_xz(std::uint64_t x, std::uint64_t z, Complex scalar, const StateVector &state) {
    StateVector out{state.n, std::vector<Complex>(state.amplitudes.size())};
    for (std::uint64_t b = 0; b < state.amplitudes.size(); ++b) {
        double sign = (__builtin_popcountll(z & b) & 1) ? -1.0 : 1.0;
        out.amplitudes[b ^ x] += scalar * sign * state.amplitudes[b];
    }
    return out;
}

double distance(const StateVector &a, const StateVector &b, double scale) {
    double total = 0;
    for (std::size_t k = 0; k < a.amplitudes.size(); ++k) {
        total += std::norm(a.amplitudes[k] - scale * b.amplitudes[k]);
    }
    return std::sqrt(total);
}

Eigen::MatrixXcd kron_letters(const std::string &letters) {
    const Complex i(0, 1);
    Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    Eigen::Matrix2cd y;
    y << 0, -i, i, 0;
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (char c : letters) {
        const Eigen::Matrix2cd &f = c == 'X' ? x : c == 'Y' ? y : c == 'Z' ? z : id;
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index col = 0; col < out.cols(); ++col) {
                next.block(2 * r, 2 * col, 2, 2) = out(r, col) * f;
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

std::size_t oracle_cap_from_env() {
    if (const char *text = std::getenv("CWS_ORACLE_CAP")) {
        char *end = nullptr;
        long value = std::strtol(text, &end, 10);
        if (end != text && *end == '\0' && value > 0) {
            return static_cast<std::size_t>(value);
        }
    }
    return kDefaultOracleCap;
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

GroupAlgebraElement GroupAlgebraElement::from_type4(const Type4Observable &a) {
    GroupAlgebraElement out;
    out.add(a.v, -0.5);
    out.add(a.v ^ a.v1, 0.5);
    out.add(a.v ^ a.v2, 0.5);
    out.add(a.v ^ a.v1 ^ a.v2, 0.5);
    return out;
}

void GroupAlgebraElement::add(const BinaryVector &v, double coefficient) {
    auto &slot = terms_[v];
    slot += coefficient;
    if (slot == 0.0) {
        terms_.erase(v);
    }
}

StateVector graph_state(const CwsCode &code, std::size_t cap) {
    const auto n = code.n();
    if (n > cap) {
        throw ResourceError("graph state on " + std::to_string(n) + " qubits exceeds the oracle cap of " +
                            std::to_string(cap) + " (set CWS_ORACLE_CAP to raise it)");
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (code.adjacency().get(a, b)) {
                edges.emplace_back(qubit_mask(n, a), qubit_mask(n, b));
            }
        }
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    StateVector psi{n, std::vector<Complex>(dim)};
    for (std::uint64_t x = 0; x < dim; ++x) {
        int parity = 0;
        for (auto [ma, mb] : edges) {
            parity ^= ((x & ma) != 0) && ((x & mb) != 0);
        }
        psi.amplitudes[x] = parity ? -scale : scale;
    }
    return psi;
}

StateVector apply(const PauliOperator &op, const StateVector &state) {
    require_size(op.size(), state.n);
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::size_t y_count = 0;
    for (std::size_t q = 0; q < op.size(); ++q) {
        y_count += op.letter(q) == 'Y';
    }
    return apply_xz(to_mask(op.x_part()), to_mask(op.z_part()), kPowers[(op.log_i() + y_count) % 4], state);
}

StateVector apply_stabilizer(const CwsCode &code, const BinaryVector &v, const StateVector &state) {
    require_size(code.n(), state.n);
    StateVector out = state;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) {
            out = apply_xz(qubit_mask(code.n(), i), to_mask(code.adjacency().row(i)), 1.0, out);
        }
    }
    return out;
}

StateVector apply(const GroupAlgebraElement &a, const CwsCode &code, const StateVector &state) {
    StateVector out{state.n, std::vector<Complex>(state.amplitudes.size())};
    for (const auto &[v, alpha] : a.terms()) {
        auto term = apply_stabilizer(code, v, state);
        for (std::size_t k = 0; k < out.amplitudes.size(); ++k) {
            out.amplitudes[k] += alpha * term.amplitudes[k];
        }
    }
    return out;
}

bool is_involution(const GroupAlgebraElement &a, double tolerance) {
    double square_sum = 0;
    for (const auto &[v, alpha] : a.terms()) {
        square_sum += alpha * alpha;
    }
    if (std::abs(square_sum - 1.0) > tolerance) {
        return false;
    }
    std::set<BinaryVector> shifts;
    for (const auto &[v, alpha] : a.terms()) {
        for (const auto &[w, beta] : a.terms()) {
            if (v != w) {
                shifts.insert(v ^ w);
            }
        }
    }
    for (const auto &u : shifts) {
        double total = 0;
        for (const auto &[v, alpha] : a.terms()) {
            auto it = a.terms().find(v ^ u);
            if (it != a.terms().end()) {
                total += alpha * it->second;
            }
        }
        if (std::abs(total) > tolerance) {
            return false;
        }
    }
    return true;
}

std::optional<int> eigencheck(const GroupAlgebraElement &a, const CwsCode &code, const StateVector &state,
                              double tolerance) {
    auto image = apply(a, code, state);
    if (distance(image, state, 1.0) < tolerance) {
        return 1;
    }
    if (distance(image, state, -1.0) < tolerance) {
        return -1;
    }
    return std::nullopt;
}

std::optional<int> eigencheck(const Type4Observable &a, const CwsCode &code, const StateVector &state,
                              double tolerance) {
    return eigencheck(GroupAlgebraElement::from_type4(a), code, state, tolerance);
}

std::vector<StateVector> codeword_states(const CwsCode &code, const StateVector &psi) {
    std::vector<StateVector> out;
    out.reserve(code.k());
    for (const auto &c : code.codewords()) {
        out.push_back(apply(PauliOperator(BinaryVector(code.n()), c), psi));
    }
    return out;
}

std::optional<int> oracle_eigenvalue(const Type4Observable &a, const CwsCode &code,
                                     const std::vector<StateVector> &words, const PauliOperator &e) {
    auto element = GroupAlgebraElement::from_type4(a);
    std::optional<int> common;
    for (const auto &w : words) {
        auto lambda = eigencheck(element, code, apply(e, w));
        if (!lambda || (common && *common != *lambda)) {
            return std::nullopt;
        }
        common = lambda;
    }
    return common;
}

bool oracle_stabilizes(const Type4Observable &a, const CwsCode &code, const std::vector<StateVector> &words) {
    auto element = GroupAlgebraElement::from_type4(a);
    for (const auto &w : words) {
        auto lambda = eigencheck(element, code, w);
        if (!lambda || *lambda != 1) {
            return false;
        }
    }
    return true;
}

bool oracle_detects(const std::vector<StateVector> &words, const PauliOperator &e) {
    std::optional<Complex> diagonal;
    for (std::size_t j = 0; j < words.size(); ++j) {
        auto image = apply(e, words[j]);
        for (std::size_t i = 0; i < words.size(); ++i) {
            Complex overlap = 0;
            for (std::size_t k = 0; k < image.amplitudes.size(); ++k) {
                overlap += std::conj(words[i].amplitudes[k]) * image.amplitudes[k];
            }
            if (i != j) {
                if (std::abs(overlap) > kEigenTolerance) {
                    return false;
                }
            } else if (!diagonal) {
                diagonal = overlap;
            } else if (std::abs(*diagonal - overlap) > kEigenTolerance) {
                return false;
            }
        }
    }
    return true;
}

Eigen::MatrixXcd dense_matrix(const PauliOperator &op) {
    std::string letters;
    for (std::size_t q = 0; q < op.size(); ++q) {
        letters += op.letter(q);
    }
    static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[op.log_i()] * kron_letters(letters);
}

Eigen::MatrixXcd dense_generator(const CwsCode &code, std::size_t i) {
    std::string letters(code.n(), 'I');
    letters[i] = 'X';
    for (std::size_t q = 0; q < code.n(); ++q) {
        if (code.adjacency().get(i, q)) {
            letters[q] = 'Z';
        }
    }
    return kron_letters(letters);
}

Eigen::MatrixXcd dense_stabilizer(const CwsCode &code, const BinaryVector &v) {
    const auto dim = Eigen::Index{1} << code.n();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i]) {
            out = out * dense_generator(code, i);
        }
    }
    return out;
}

Eigen::MatrixXcd dense_matrix(const GroupAlgebraElement &a, const CwsCode &code) {
    const auto dim = Eigen::Index{1} << code.n();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &[v, alpha] : a.terms()) {
        out += alpha * dense_stabilizer(code, v);
    }
    return out;
}

}  // namespace cws
