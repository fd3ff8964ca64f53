// Copyright 2026 The qcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <algorithm>

#include "qcc/error.hpp"
#include "qcc/numkit.hpp"
#include "qcc/random.hpp"
#include "support.hpp"

namespace {

using namespace qcc;
using qcc_test::for_cases;
using qcc_test::draw_int;

TEST(Numkit, KronOfUnitsIsUnit) {
  const Matrix k = kron(matrix_unit(2, 2, 1, 0), matrix_unit(3, 3, 2, 1));
  EXPECT_EQ(k.rows(), 6);
  EXPECT_EQ(k(1 * 3 + 2, 0 * 3 + 1), Complex(1.0));
  EXPECT_DOUBLE_EQ(k.cwiseAbs().sum(), 1.0);
}

TEST(Numkit, PartialTraceMatchesIndexLoop) {
  for_cases(11, 30, [](int, Rng& rng) {
    const int da = draw_int(rng, 1, 4);
    const int db = draw_int(rng, 1, 4);
    const Matrix m = ginibre(da * db, da * db, rng);
    EXPECT_LT(max_abs(partial_trace(m, da, db, Keep::A) -
                      qcc_test::partial_trace_oracle(m, da, db, true)),
              1e-13);
    EXPECT_LT(max_abs(partial_trace(m, da, db, Keep::B) -
                      qcc_test::partial_trace_oracle(m, da, db, false)),
              1e-13);
  });
}

TEST(Numkit, SchattenKnownValues) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = Complex(0.0, -4.0);
  EXPECT_NEAR(schatten_norm(m, 1.0), 7.0, 1e-14);
  EXPECT_NEAR(schatten_norm(m, 2.0), 5.0, 1e-14);
  EXPECT_NEAR(schatten_norm(m, kInf), 4.0, 1e-14);
  EXPECT_NEAR(schatten_norm(m, 3.0), std::cbrt(27.0 + 64.0), 1e-13);
}

TEST(Numkit, SchattenTwoIsFrobenius) {
  for_cases(12, 20, [](int, Rng& rng) {
    const int n = draw_int(rng, 1, 5);
    const Matrix m = ginibre(n, n, rng);
    EXPECT_NEAR(schatten_norm(m, 2.0), m.norm(), 1e-12);
  });
}

TEST(Numkit, HermitianEigenReconstructs) {
  for_cases(13, 20, [](int, Rng& rng) {
    const Matrix h = random_hermitian(draw_int(rng, 1, 6), rng);
    const HermitianEigen e = hermitian_eigen(h);
    for (Eigen::Index i = 1; i < e.values.size(); ++i) {
      EXPECT_GE(e.values(i - 1), e.values(i));
    }
    const Matrix back = e.vectors * e.values.cast<Complex>().asDiagonal() *
                        e.vectors.adjoint();
    EXPECT_LT(max_abs(back - h), 1e-12);
  });
}

TEST(Numkit, CanonicalEigenIsBasisIndependent) {
  // A degenerate matrix conjugated by a unitary that fixes the eigenspaces
  // must produce the same canonical vectors.
  for_cases(14, 10, [](int, Rng& rng) {
    const Matrix u = haar_unitary(4, rng);
    RealVector diag(4);
    diag << 2.0, 2.0, 1.0, 0.5;
    const Matrix h = u * diag.cast<Complex>().asDiagonal() * u.adjoint();
    Matrix mix = Matrix::Identity(4, 4);
    mix.topLeftCorner(2, 2) = haar_unitary(2, rng);
    const Matrix u2 = u * mix;
    const Matrix h2 = u2 * diag.cast<Complex>().asDiagonal() * u2.adjoint();
    const HermitianEigen a = canonical_hermitian_eigen(h);
    const HermitianEigen b = canonical_hermitian_eigen(h2);
    EXPECT_LT(max_abs(a.vectors.leftCols(2) - b.vectors.leftCols(2)), 1e-8);
  });
}

TEST(Numkit, EntropyOfKnownStates) {
  EXPECT_NEAR(von_neumann_entropy(identity(4) / 4.0), 2.0, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(identity(2) / 2.0, LogBase::E), std::log(2.0),
              1e-14);
  Vector psi = Vector::Zero(3);
  psi(1) = 1.0;
  EXPECT_NEAR(von_neumann_entropy(projector(psi)), 0.0, 1e-14);
  const double probs[] = {0.25, 0.75};
  EXPECT_NEAR(shannon_entropy(probs), qcc_test::h2(0.25), 1e-14);
}

TEST(Numkit, EntropyRejectsNonStates) {
  EXPECT_THROW(von_neumann_entropy(identity(2)), ValidationError);
}

TEST(Numkit, MajorizationExamples) {
  const std::vector<double> sharp{1.0, 0.0, 0.0};
  const std::vector<double> flat{1.0 / 3, 1.0 / 3, 1.0 / 3};
  EXPECT_TRUE(majorizes(sharp, flat));
  EXPECT_FALSE(majorizes(flat, sharp));
  const std::vector<double> shorter{0.5, 0.5};
  EXPECT_TRUE(majorizes(shorter, flat));
  const std::vector<double> bad{0.5, 0.1};
  EXPECT_THROW(majorizes(bad, flat), ValidationError);
}

TEST(Numkit, NonzeroSpectrumDropsZeros) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 0.25;
  m(2, 2) = 0.75;
  const Spectrum s = nonzero_spectrum(m);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.values[0], 0.75);
  EXPECT_DOUBLE_EQ(s.values[1], 0.25);
}

TEST(Numkit, VecRoundTrip) {
  Rng rng(15);
  const Matrix m = ginibre(3, 4, rng);
  const Vector v = vec_row_major(m);
  EXPECT_EQ(v(1 * 4 + 2), m(1, 2));
  EXPECT_EQ(unvec_row_major(v, 3, 4), m);
}

TEST(Numkit, PsdPowerAndSqrt) {
  for_cases(16, 10, [](int, Rng& rng) {
    const Matrix rho = random_density_matrix(draw_int(rng, 1, 5), rng);
    const Matrix s = psd_sqrt(rho);
    EXPECT_LT(max_abs(s * s - rho), 1e-12);
    EXPECT_LT(max_abs(psd_power(rho, 2.0) - rho * rho), 1e-12);
  });
}

TEST(Random, StreamIsFixed) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  // The engine stream is fixed by the standard.
  std::mt19937_64 ref(42);
  Rng c(42);
  EXPECT_EQ(c.next_u64(), ref());
}

TEST(Random, DeriveSeedSeparatesStreams) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Random, UniformIntInRange) {
  Rng rng(3);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 5000; ++i) ++counts[rng.uniform_int(5)];
  for (int c : counts) EXPECT_GT(c, 800);
}

TEST(Random, HaarUnitaryHasPositiveRDiagonalConvention) {
  for_cases(17, 20, [](int, Rng& rng) {
    const int n = draw_int(rng, 1, 6);
    const Matrix u = haar_unitary(n, rng);
    EXPECT_LT(max_abs(u.adjoint() * u - identity(n)), 1e-12);
  });
}

TEST(Random, StatesAreStates) {
  for_cases(18, 20, [](int, Rng& rng) {
    const int d = draw_int(rng, 1, 6);
    EXPECT_NEAR(random_pure_state(d, rng).norm(), 1.0, 1e-14);
    const Matrix rho = random_density_matrix(d, rng);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-13);
    EXPECT_GE(eigenvalues_hermitian(rho).minCoeff(), -1e-14);
    const std::vector<double> p = random_probability_vector(d, rng);
    double total = 0.0;
    for (double x : p) {
      EXPECT_GE(x, 0.0);
      total += x;
    }
    EXPECT_NEAR(total, 1.0, 1e-14);
  });
}

TEST(Random, IsometryColumnsOrthonormal) {
  Rng rng(19);
  const Matrix v = random_isometry(5, 3, rng);
  EXPECT_LT(max_abs(v.adjoint() * v - identity(3)), 1e-12);
}

}  // namespace
