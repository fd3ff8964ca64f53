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

#include "qcc/conjugate.hpp"
#include "qcc/ebt.hpp"
#include "qcc/error.hpp"
#include "qcc/purity.hpp"
#include "support.hpp"

namespace {

using namespace qcc;
using qcc_test::draw_int;
using qcc_test::for_cases;

// Phi^C(rho)_jk = <x_k|x_j> <w_j|rho|w_k> for Kraus operators x_k w_k^dagger.
Matrix ebt_conjugate_oracle(const EBTChannel& e, const Matrix& rho) {
  const int n = static_cast<int>(e.x().size());
  Matrix out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      out(j, k) = e.x()[k].dot(e.x()[j]) * e.w()[j].dot(rho * e.w()[k]);
    }
  }
  return out;
}

TEST(Ebt, KrausAreRankOne) {
  Rng rng(1);
  const EBTChannel e = random_ebt(3, 2, 4, rng);
  ASSERT_EQ(e.channel().size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_LT(max_abs(e.channel()[k] - e.x()[k] * e.w()[k].adjoint()), 1e-15);
  }
}

TEST(Ebt, RejectsIncompleteMeasurement) {
  Vector w0 = Vector::Zero(2);
  w0(0) = 1.0;
  Vector x0 = Vector::Zero(2);
  x0(1) = 1.0;
  EXPECT_THROW(EBTChannel({x0}, {w0}), ValidationError);
}

TEST(Ebt, ConjugateFormMatchesOracle) {
  for_cases(2, 20, [](int, Rng& rng) {
    const int d_in = draw_int(rng, 2, 3);
    const EBTChannel e = random_ebt(d_in, draw_int(rng, 2, 3), draw_int(rng, d_in, 5), rng);
    const EbtConjugate c = conjugate_ebt(e);
    const Matrix rho = random_density_matrix(d_in, rng);
    const Matrix expected = ebt_conjugate_oracle(e, rho);
    EXPECT_LT(max_abs(hadamard_apply(c.form, rho) - expected), 1e-14);
    EXPECT_LT(max_abs(apply_channel(c.channel, rho) - expected), 1e-14);
    EXPECT_LT(choi_distance(pseudodiag_kraus(e), c.channel), 1e-10);
  });
}

TEST(Hadamard, DiagonalKrausRealizesForm) {
  for_cases(3, 20, [](int, Rng& rng) {
    const HadamardChannel h = random_hadamard(draw_int(rng, 2, 4), rng);
    const KrausChannel k = pseudodiag_kraus(h);
    const Matrix rho = random_density_matrix(static_cast<int>(h.frame.size()), rng);
    EXPECT_LT(max_abs(apply_channel(k, rho) - hadamard_apply(h, rho)), 1e-12);
  });
}

TEST(Hadamard, CqConjugateDetected) {
  for_cases(4, 20, [](int, Rng& rng) {
    const EBTChannel cq = random_extreme_cq(draw_int(rng, 2, 3), draw_int(rng, 2, 3), rng);
    const HadamardDetection h = is_hadamard_form(conjugate_kraus(cq.channel()));
    EXPECT_EQ(h.verdict, Verdict::Yes);
    EXPECT_TRUE(h.orthonormal_frame);
    // The detected form reproduces the conjugate channel.
    const Matrix rho = random_density_matrix(cq.d_in(), rng);
    EXPECT_LT(max_abs(hadamard_apply({h.gram, h.frame}, rho) -
                      apply_channel(conjugate_kraus(cq.channel()), rho)),
              1e-10);
  });
}

TEST(Hadamard, GenericChannelRejected) {
  for_cases(5, 20, [](int, Rng& rng) {
    const KrausChannel ch = random_channel(2, 3, 3, rng);
    EXPECT_EQ(is_hadamard_form(ch).verdict, Verdict::No);
  });
  EXPECT_EQ(to_string(Verdict::Ambiguous), "ambiguous");
}

TEST(Hadamard, ConjugateIsEntanglementBreaking) {
  for_cases(6, 20, [](int, Rng& rng) {
    const KrausChannel h = pseudodiag_kraus(random_hadamard(draw_int(rng, 2, 3), rng));
    const EbtReconstruction e = as_ebt(conjugate_kraus(h));
    EXPECT_TRUE(e.rank_one);
    EXPECT_LT(e.residual, 1e-10);
  });
}

TEST(Hadamard, GenericChannelNotRankOne) {
  Rng rng(7);
  EXPECT_FALSE(as_ebt(random_channel(2, 2, 2, rng)).rank_one);
}

TEST(Hadamard, UnitaryIsHadamard) {
  // A unitary channel has Hadamard form with the all-ones gram.
  Rng rng(8);
  const HadamardDetection h = is_hadamard_form(unitary_channel(haar_unitary(3, rng)));
  EXPECT_EQ(h.verdict, Verdict::Yes);
}

TEST(Hadamard, MultiplicativeWithArbitraryChannel) {
  Rng rng(9);
  const KrausChannel h = pseudodiag_kraus(random_hadamard(2, rng));
  const KrausChannel other = random_channel(2, 2, 2, rng);
  PurityOptions opts;
  opts.seed = 10;
  opts.restarts = 16;
  EXPECT_NEAR(multiplicativity_gap(h, other, 2.0, opts).gap, 0.0, 1e-6);
}

}  // namespace
