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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "cws/pauli.h"

namespace cws {
namespace {

using Matrix = Eigen::MatrixXcd;
const std::complex<double> kI(0, 1);

Matrix letter_matrix(char c) {
    Matrix m(2, 2);
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -kI, kI, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

// Test-side dense construction; qubit 1 is the leftmost tensor factor.
Matrix dense(const PauliOperator &p) {
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < p.size(); ++q) {
        auto l = letter_matrix(p.letter(q));
        Matrix next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * l;
            }
        }
        out = next;
    }
    return std::pow(kI, static_cast<int>(p.log_i())) * out;
}

PauliOperator random_pauli(std::mt19937_64 &rng, std::size_t n) {
    static const char kLetters[] = "IXYZ";
    std::string s;
    for (std::size_t q = 0; q < n; ++q) {
        s += kLetters[rng() % 4];
    }
    auto p = PauliOperator::from_string(s);
    return PauliOperator(p.x_part(), p.z_part(), static_cast<std::uint8_t>(rng() % 4));
}

TEST(Pauli, ParseAndPrint) {
    EXPECT_EQ(PauliOperator::from_string("XIZY").str(), "XIZY");
    EXPECT_EQ(PauliOperator::from_string("-iX_Z").str(), "-iXIZ");
    EXPECT_EQ(PauliOperator::from_string("+iZ").log_i(), 1);
    EXPECT_EQ(PauliOperator::from_string("-Y").log_i(), 2);
    EXPECT_THROW(PauliOperator::from_string("XQ"), std::invalid_argument);
    EXPECT_THROW(PauliOperator::from_string("-"), std::invalid_argument);
}

TEST(Pauli, SingleQubitProducts) {
    auto x = PauliOperator::from_string("X");
    auto y = PauliOperator::from_string("Y");
    auto z = PauliOperator::from_string("Z");
    EXPECT_EQ((x * z).str(), "-iY");
    EXPECT_EQ((z * x).str(), "iY");
    EXPECT_EQ((x * y).str(), "iZ");
    EXPECT_EQ((y * y).str(), "I");
    EXPECT_FALSE(commutes(x, z));
    EXPECT_TRUE(commutes(x, x));
}

TEST(Pauli, ProductMatchesDenseMatrices) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto n = 1 + rng() % 4;
        auto p = random_pauli(rng, n);
        auto q = random_pauli(rng, n);
        EXPECT_TRUE((dense(p * q) - dense(p) * dense(q)).norm() < 1e-12) << p.str() << " * " << q.str();
        Matrix pq = dense(p) * dense(q);
        Matrix qp = dense(q) * dense(p);
        EXPECT_EQ(commutes(p, q), (pq - qp).norm() < 1e-12);
    }
}

TEST(Pauli, SquareIsScalar) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_pauli(rng, 1 + rng() % 6);
        auto sq = p * p;
        EXPECT_TRUE(sq.is_identity());
        EXPECT_EQ(sq.log_i() % 2, 0);
    }
}

TEST(Pauli, WeightAndSingle) {
    EXPECT_EQ(weight(PauliOperator::from_string("XIYZI")), 3u);
    EXPECT_EQ(PauliOperator::single(4, 2, 'Y').str(), "IIYI");
    EXPECT_THROW(PauliOperator::single(4, 4, 'X'), std::invalid_argument);
    EXPECT_THROW(PauliOperator::single(4, 0, 'Q'), std::invalid_argument);
    EXPECT_THROW(multiply(PauliOperator(2), PauliOperator(3)), std::invalid_argument);
}

TEST(Pauli, StabilizerElement) {
    std::vector<PauliOperator> gens{PauliOperator::from_string("XZ"), PauliOperator::from_string("ZX")};
    EXPECT_EQ(stabilizer_element(gens, BinaryVector::from_string("00")).str(), "II");
    EXPECT_EQ(stabilizer_element(gens, BinaryVector::from_string("11")).str(), "YY");
    std::vector<PauliOperator> bad{PauliOperator::from_string("XI"), PauliOperator::from_string("ZI")};
    EXPECT_THROW(stabilizer_element(bad, BinaryVector::from_string("11")), std::invalid_argument);
    EXPECT_THROW(stabilizer_element(gens, BinaryVector::from_string("1")), std::invalid_argument);
}

}  // namespace
}  // namespace cws
