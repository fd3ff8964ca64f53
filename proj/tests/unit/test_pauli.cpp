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

#include "qcc/conjugate.hpp"
#include "qcc/error.hpp"
#include "qcc/pauli.hpp"
#include "qcc/purity.hpp"
#include "support.hpp"

namespace {

using namespace qcc;
using qcc_test::for_cases;

// gamma_mn = (1/d^2) Tr(T_m rho T_n^dagger), from the oracle operators.
Matrix nc_oracle(const std::vector<Matrix>& ops, const Matrix& rho) {
  const int n = static_cast<int>(ops.size());
  const double d2 = static_cast<double>(n);
  Matrix g(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) g(m, k) = (ops[m] * rho * ops[k].adjoint()).trace() / d2;
  }
  return g;
}

std::vector<double> random_weights(int n, Rng& rng) {
  return random_probability_vector(n, rng);
}

TEST(PauliBasis, OperatorsMatchDefinition) {
  for (int d = 2; d <= 5; ++d) {
    const PauliBasis b = build_basis(d);
    const std::vector<Matrix> ref = qcc_test::weyl_operators(d);
    ASSERT_EQ(b.size(), d * d);
    for (int m = 0; m < d * d; ++m) EXPECT_LT(max_abs(b.ops[m] - ref[m]), 1e-14);
    // Z X = w X Z.
    const Matrix x = qcc_test::shift_x(d);
    const Matrix z = qcc_test::clock_z(d);
    EXPECT_LT(max_abs(z * x - qcc_test::root_of_unity(d, 1) * x * z), 1e-14);
  }
}

TEST(PauliBasis, ProductTableMatchesMatrices) {
  for (int d : {2, 3, 4}) {
    const PauliBasis b = build_basis(d);
    for (int m = 0; m < b.size(); ++m) {
      for (int n = 0; n < b.size(); ++n) {
        const auto p = b.product(m, n);
        EXPECT_LT(max_abs(b.ops[m] * b.ops[n] - p.phase * b.ops[p.index]), 1e-13);
        const Complex chi = b.commutation_phase(m, n);
        EXPECT_LT(max_abs(b.ops[m] * b.ops[n] - chi * b.ops[n] * b.ops[m]), 1e-13);
      }
      const auto a = b.adjoint(m);
      EXPECT_LT(max_abs(b.ops[m].adjoint() - a.phase * b.ops[a.index]), 1e-13);
    }
    EXPECT_LT(phase_table_defect(b), 1e-12);
  }
}

TEST(PauliBasis, ProductBasisIsKronecker) {
  const PauliBasis b = product_basis(build_basis(2), build_basis(3));
  EXPECT_EQ(b.d, 6);
  ASSERT_EQ(b.size(), 36);
  const std::vector<Matrix> b2 = qcc_test::weyl_operators(2);
  const std::vector<Matrix> b3 = qcc_test::weyl_operators(3);
  EXPECT_LT(max_abs(b.ops[2 * 9 + 5] - kron(b2[2], b3[5])), 1e-14);
  EXPECT_EQ(b.label(2 * 9 + 5), std::make_pair(2, 5));
  EXPECT_LT(phase_table_defect(b), 1e-12);
}

TEST(PauliBasis, DescriptorsRoundTrip) {
  const PauliBasis b = product_basis(build_basis(2), build_basis(2));
  EXPECT_EQ(basis_descriptor(b), "pauli_product:[2,2]");
  EXPECT_EQ(basis_descriptor(build_basis(3)), "pauli");
  const PauliBasis back = basis_from_descriptor("pauli_product:[2,2]", 4);
  EXPECT_LT(max_abs(back.ops[7] - b.ops[7]), 1e-15);
  EXPECT_THROW(basis_from_descriptor("gellmann", 3), ValidationError);
}

TEST(PauliBasis, ClosureAndNames) {
  const PauliBasis b = build_basis(3);
  EXPECT_EQ(b.name(0), "I");
  EXPECT_EQ(b.closure({1}), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(b.closure({1, 3}).size(), 9u);
  EXPECT_EQ(cosets_of(b, {0, 1, 2}).size(), 3u);
}

TEST(PauliChannel, WeightValidation) {
  const PauliBasis b = build_basis(2);
  EXPECT_THROW(PauliDiagonalChannel(b, {0.5, 0.5, 0.5, -0.5}), ValidationError);
  EXPECT_THROW(PauliDiagonalChannel(b, {0.5, 0.2}), DimensionError);
  EXPECT_THROW(PauliDiagonalChannel(b, {0.5, 0.2, 0.2, 0.2}), ValidationError);
}

TEST(PauliChannel, DepolarizingWeights) {
  const PauliDiagonalChannel dep = depolarizing(build_basis(3), 0.5);
  EXPECT_NEAR(dep.weights()[0], 0.5 + 0.5 / 9.0, 1e-15);
  for (int m = 1; m < 9; ++m) EXPECT_NEAR(dep.weights()[m], 0.5 / 9.0, 1e-15);
  // Action b rho + (1 - b) I/d.
  Rng rng(3);
  const Matrix rho = random_density_matrix(3, rng);
  EXPECT_LT(max_abs(apply_channel(dep.channel(), rho) - (0.5 * rho + identity(3) / 6.0)),
            1e-14);
}

TEST(PauliChannel, LambdaFromDefinition) {
  for_cases(4, 20, [](int, Rng& rng) {
    const int d = 2 + static_cast<int>(rng.uniform_int(3));
    const PauliDiagonalChannel ch(build_basis(d), random_weights(d * d, rng));
    const std::vector<Matrix> t = qcc_test::weyl_operators(d);
    const std::vector<Complex> lambda = lambda_spectrum(ch);
    for (int n = 0; n < d * d; ++n) {
      // Phi(T_n) = lambda_n T_n.
      EXPECT_LT(max_abs(apply_channel(ch.channel(), t[n]) - lambda[n] * t[n]), 1e-13);
    }
    EXPECT_NEAR(lambda[0].real(), 1.0, 1e-14);
  });
}

TEST(PauliChannel, ProductChannelIsTensor) {
  Rng rng(5);
  const PauliDiagonalChannel a(build_basis(2), random_weights(4, rng));
  const PauliDiagonalChannel b(build_basis(2), random_weights(4, rng));
  EXPECT_TRUE(same_channel(product_channel(a, b).channel(), tensor(a.channel(), b.channel())));
}

TEST(PauliChannel, QcChannelIsShiftThenDephase) {
  const std::vector<double> q{0.5, 0.3, 0.2};
  const PauliDiagonalChannel ch = qc_channel(build_basis(3), q);
  Vector e0 = Vector::Zero(3);
  e0(0) = 1.0;
  const Matrix out = apply_channel(ch.channel(), projector(e0));
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(out(j, j).real(), q[j], 1e-14);
  EXPECT_LT(max_abs(out - out.diagonal().asDiagonal().toDenseMatrix()), 1e-14);
}

TEST(NoisyImage, MatchesDefinition) {
  for_cases(6, 20, [](int, Rng& rng) {
    const int d = 2 + static_cast<int>(rng.uniform_int(4));
    const Matrix rho = random_density_matrix(d, rng);
    EXPECT_LT(max_abs(noisy_conjugate_image(build_basis(d), rho).matrix -
                      nc_oracle(qcc_test::weyl_operators(d), rho)),
              1e-14);
  });
}

TEST(NoisyImage, PureStatePropertiesHold) {
  for_cases(7, 30, [](int, Rng& rng) {
    const int d = 2 + static_cast<int>(rng.uniform_int(4));
    const NcProperties p = nc_properties(
        noisy_conjugate_image(build_basis(d), projector(random_pure_state(d, rng))).matrix,
        d);
    EXPECT_TRUE(p.holds(d, 1e-10));
    EXPECT_EQ(p.projector_rank, d);
  });
}

TEST(NoisyImage, MixedStateIsNotProjector) {
  const int d = 3;
  const NcProperties p =
      nc_properties(noisy_conjugate_image(build_basis(d), identity(d) / 3.0).matrix, d);
  EXPECT_FALSE(p.holds(d, 1e-10));
}

TEST(NoisyImage, ExplicitAndCyclicForms) {
  for_cases(8, 20, [](int, Rng& rng) {
    const int d = 2 + static_cast<int>(rng.uniform_int(4));
    const Vector psi = random_pure_state(d, rng);
    const Matrix direct = noisy_conjugate_image(build_basis(d), projector(psi)).matrix;
    EXPECT_LT(max_abs(nc_image_explicit(d, psi) - direct), 1e-13);
    Matrix phase = Matrix::Zero(d * d, d * d);
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) phase(d * j + k, d * j + k) = std::conj(qcc_test::root_of_unity(d, j * k));
    }
    EXPECT_LT(max_abs(phase * nc_image_cyclic_form(d, psi) * phase.adjoint() - direct), 1e-13);
  });
}

TEST(NoisyImage, UnitaryFormAndRecovery) {
  for (int d : {2, 3, 4}) {
    const PauliBasis b = build_basis(d);
    const Matrix u = find_u_t(b.ops, {});
    EXPECT_LT(max_abs(u.adjoint() * u - identity(d * d)), 1e-13);
    Rng rng(9 + d);
    const Matrix rho = random_density_matrix(d, rng);
    const Matrix gamma = noisy_conjugate_image(b, rho).matrix;
    EXPECT_LT((gamma - u * kron(identity(d), rho) * u.adjoint() / static_cast<double>(d)).norm(),
              1e-13);
    EXPECT_LT((recover_state(u, gamma, d) - rho).norm(), 1e-13);
  }
}

TEST(NoisyImage, ConjugateOfPauliChannel) {
  for_cases(10, 10, [](int, Rng& rng) {
    const int d = 2 + static_cast<int>(rng.uniform_int(3));
    const std::vector<double> a = random_weights(d * d, rng);
    const PauliDiagonalChannel ch(build_basis(d), a);
    const Matrix rho = random_density_matrix(d, rng);
    const Matrix gamma = noisy_conjugate_image(ch.basis(), rho).matrix;
    Matrix expected(d * d, d * d);
    for (int m = 0; m < d * d; ++m) {
      for (int n = 0; n < d * d; ++n) {
        expected(m, n) = static_cast<double>(d * d) * std::sqrt(a[m] * a[n]) * gamma(m, n);
      }
    }
    EXPECT_LT(max_abs(apply_channel(conjugate_kraus(ch.channel()), rho) - expected), 1e-13);
  });
}

TEST(Subgroups, SupportOfBasisStates) {
  const PauliBasis b = build_basis(3);
  Vector e0 = Vector::Zero(3);
  e0(0) = 1.0;
  const SubgroupReport s = subgroup_of_support(b, projector(e0));
  EXPECT_EQ(s.order, 3);
  EXPECT_EQ(s.subgroup_indices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(s.cosets.size(), 3u);
  EXPECT_EQ(subgroup_of_support(b, identity(3) / 3.0).order, 1);
}

TEST(Subgroups, BlochCoefficientsReconstruct) {
  Rng rng(11);
  const PauliBasis b = build_basis(3);
  const Matrix rho = random_density_matrix(3, rng);
  const std::vector<Complex> c = bloch_coefficients(b, rho);
  Matrix back = Matrix::Zero(3, 3);
  for (int m = 0; m < 9; ++m) back += c[m] * b.ops[m] / 3.0;
  EXPECT_LT(max_abs(back - rho), 1e-14);
}

TEST(Decomposition, FindsBlocks) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(2, 2) = m(0, 2) = m(2, 0) = 1.0;
  m(1, 1) = m(3, 3) = m(1, 3) = m(3, 1) = 2.0;
  const Decomposition dec = is_decomposable(m);
  EXPECT_TRUE(dec.decomposable);
  ASSERT_EQ(dec.blocks.size(), 2u);
  EXPECT_EQ(dec.blocks[0], (std::vector<int>{0, 2}));
  EXPECT_FALSE(is_decomposable(Matrix::Ones(3, 3)).decomposable);
}

TEST(Axes, StatesAreEigenvectors) {
  const PauliBasis b = build_basis(3);
  for (int w = 1; w < 9; ++w) {
    const std::vector<Vector> states = axis_states(b, w);
    ASSERT_EQ(states.size(), 3u);
    Matrix total = Matrix::Zero(3, 3);
    for (int n = 0; n < 3; ++n) {
      const Vector v = b.ops[w] * states[n];
      // Eigenvector: |<psi|W psi>| = 1.
      EXPECT_NEAR(std::abs(states[n].dot(v)), 1.0, 1e-12);
      total += axis_projector(b, w, n);
    }
    EXPECT_LT(max_abs(total - identity(3)), 1e-12);
  }
}

TEST(Axes, ChannelAndLambda) {
  const PauliBasis b = build_basis(3);
  const std::vector<Axis> axes{{3, 0.1}, {1, 0.2}};
  const double s = 0.4;
  const double u = 1.0 - s - 0.3;
  const PauliDiagonalChannel ch = axes_channel(b, s, axes, u);
  const std::vector<Complex> lambda = lambda_spectrum(ch);
  // lambda on axis elements is s + t_L; the remaining axes carry s.
  EXPECT_NEAR(std::abs(lambda[3]), s + 0.1, 1e-12);
  EXPECT_NEAR(std::abs(lambda[1]), s + 0.2, 1e-12);
  EXPECT_NEAR(std::abs(lambda[4]), s, 1e-12);
  EXPECT_NEAR(axes_lambda(b, s, axes), s + 0.2, 1e-15);
  EXPECT_THROW(axes_channel(b, s, {{3, 0.1}, {6, 0.2}}, u), ValidationError);
}

TEST(Bounds, Nu2BoundForDepolarizing) {
  const PauliDiagonalChannel dep = depolarizing(build_basis(3), 0.5);
  const Nu2Bound nb = nu2_bound(dep);
  EXPECT_NEAR(nb.bound, std::sqrt(0.5), 1e-12);
  ASSERT_TRUE(nb.witness_state.has_value());
  EXPECT_NEAR(nb.witness_value, nb.bound, 1e-12);
}

TEST(Bounds, Nu2BoundDominatesRandomInputs) {
  for_cases(12, 10, [](int, Rng& rng) {
    const PauliDiagonalChannel ch(build_basis(3), random_weights(9, rng));
    const Nu2Bound nb = nu2_bound(ch);
    for (int i = 0; i < 20; ++i) {
      EXPECT_LE(output_p_norm(ch.channel(), random_pure_state(3, rng), 2.0), nb.bound + 1e-12);
    }
  });
}

TEST(Bounds, MajorizationBoundDepolarizing) {
  const PauliDiagonalChannel dep = depolarizing(build_basis(2), 0.5);
  const MajorizationBound mb = majorization_bound(dep, kInf);
  EXPECT_NEAR(mb.bound, 0.75, 1e-12);
  double total = 0.0;
  for (double x : mb.beta) total += x;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(mb.partition.size(), 2u);
}

TEST(Bounds, InfinityCertificateForQc) {
  const PauliDiagonalChannel ch = qc_channel(build_basis(3), {0.6, 0.3, 0.1});
  const InfinityCheck c = p_infty_multiplicativity_check(ch, 2);
  EXPECT_TRUE(c.subgroup_ok);
  EXPECT_TRUE(c.certified);
  EXPECT_FALSE(c.conclusion.empty());
}

TEST(Classify, ProductAndMaximallyEntangled) {
  const PauliBasis b = product_basis(build_basis(3), build_basis(3));
  Vector prod = Vector::Zero(9);
  prod(0) = 1.0;
  EXPECT_EQ(classify_product_or_me(b, prod).state_class, StateClass::Product);
  Vector me = Vector::Zero(9);
  for (int j = 0; j < 3; ++j) me(j * 3 + j) = 1.0 / std::sqrt(3.0);
  const ProductOrMe c = classify_product_or_me(b, me);
  EXPECT_EQ(c.state_class, StateClass::MaximallyEntangled);
  EXPECT_TRUE(c.d2_decomposable);
  EXPECT_EQ(to_string(StateClass::Other), "other");
  EXPECT_THROW(classify_product_or_me(build_basis(9), me), ValidationError);
}

}  // namespace
