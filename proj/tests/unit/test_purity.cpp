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

#include "qcc/channel.hpp"
#include "qcc/conjugate.hpp"
#include "qcc/pauli.hpp"
#include "qcc/purity.hpp"
#include "support.hpp"

namespace {

using namespace qcc;
using qcc_test::for_cases;

// Qubit channel rho -> (1 - q) rho + q I/2, so the Bloch vector shrinks by
// lambda = 1 - q.
KrausChannel qubit_depolarizing(double q) {
  std::vector<Matrix> ops = qcc_test::weyl_operators(2);
  std::vector<Matrix> kraus{std::sqrt(1.0 - 0.75 * q) * ops[0]};
  for (int m = 1; m < 4; ++m) kraus.push_back(std::sqrt(q / 4.0) * ops[m]);
  return KrausChannel(2, 2, kraus);
}

double closed_form_nu(double lambda, double p) {
  const double hi = 0.5 * (1.0 + lambda);
  const double lo = 0.5 * (1.0 - lambda);
  if (std::isinf(p)) return hi;
  return std::pow(std::pow(hi, p) + std::pow(lo, p), 1.0 / p);
}

// Brute-force maximum over a Bloch-sphere grid.
double grid_nu(const KrausChannel& ch, double p, int n) {
  double best = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double theta = M_PI * i / n;
    for (int j = 0; j < 2 * n; ++j) {
      const double phi = M_PI * j / n;
      Vector psi(2);
      psi << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
      best = std::max(best, schatten_norm(apply_channel(ch, projector(psi)), p));
    }
  }
  return best;
}

PurityOptions opts_with(std::uint64_t seed, int restarts = 16) {
  PurityOptions o;
  o.seed = seed;
  o.restarts = restarts;
  return o;
}

TEST(Purity, IdentityIsPure) {
  for (double p : {1.5, 2.0, 3.0, kInf}) {
    EXPECT_NEAR(nu_p(identity_channel(3), p, opts_with(1)).value, 1.0, 1e-12);
  }
  EXPECT_NEAR(s_min(identity_channel(3), opts_with(1)).value, 0.0, 1e-10);
}

TEST(Purity, PEqualOneIsTrivial) {
  Rng rng(2);
  EXPECT_DOUBLE_EQ(nu_p(random_channel(2, 3, 2, rng), 1.0).value, 1.0);
}

TEST(Purity, CompletelyNoisyValues) {
  const int d = 3;
  const KrausChannel ch = completely_noisy_channel(d);
  for (double p : {2.0, 3.0}) {
    EXPECT_NEAR(nu_p(ch, p, opts_with(3)).value, std::pow(d, (1.0 - p) / p), 1e-12);
  }
  EXPECT_NEAR(nu_p(ch, kInf, opts_with(3)).value, 1.0 / d, 1e-12);
  EXPECT_NEAR(s_min(ch, opts_with(3)).value, std::log2(d), 1e-9);
}

TEST(Purity, QubitDepolarizingClosedForm) {
  for (double q : {0.0, 0.2, 0.5, 0.9}) {
    const KrausChannel ch = qubit_depolarizing(q);
    const double lambda = 1.0 - q;
    for (double p : {1.5, 2.0, 3.0, kInf}) {
      EXPECT_NEAR(nu_p(ch, p, opts_with(4)).value, closed_form_nu(lambda, p), 1e-9)
          << "q=" << q << " p=" << p;
    }
    EXPECT_NEAR(s_min(ch, opts_with(4)).value, qcc_test::h2(0.5 * (1 + lambda)), 1e-8);
  }
}

TEST(Purity, AgreesWithBlochGrid) {
  for_cases(5, 6, [](int, Rng& rng) {
    const KrausChannel ch = random_channel(2, 2, 2 + static_cast<int>(rng.uniform_int(2)), rng);
    for (double p : {2.0, kInf}) {
      const double found = nu_p(ch, p, opts_with(6)).value;
      const double grid = grid_nu(ch, p, 60);
      EXPECT_GE(found, grid - 1e-12);
      EXPECT_LT(found - grid, 2e-3);
    }
  });
}

TEST(Purity, OptimizerStateAttainsValue) {
  for_cases(7, 6, [](int, Rng& rng) {
    const KrausChannel ch = random_channel(3, 2, 3, rng);
    const PurityReport r = nu_p(ch, 2.0, opts_with(8));
    EXPECT_NEAR(r.optimizer_state.norm(), 1.0, 1e-12);
    EXPECT_NEAR(output_p_norm(ch, r.optimizer_state, 2.0), r.value, 1e-12);
    const PurityReport e = s_min(ch, opts_with(8));
    EXPECT_NEAR(output_entropy(ch, e.optimizer_state), e.value, 1e-12);
  });
}

TEST(Purity, DeterministicAcrossThreadCounts) {
  Rng rng(9);
  const KrausChannel ch = random_channel(3, 3, 3, rng);
  PurityOptions a = opts_with(10);
  PurityOptions b = a;
  b.threads = 3;
  const PurityReport ra = nu_p(ch, 3.0, a);
  const PurityReport rb = nu_p(ch, 3.0, b);
  EXPECT_EQ(ra.value, rb.value);
  EXPECT_EQ(ra.optimizer_state, rb.optimizer_state);
}

TEST(Purity, ConjugateHasSameValues) {
  for_cases(11, 5, [](int, Rng& rng) {
    const KrausChannel ch = random_channel(2, 2, 3, rng);
    const KrausChannel conj = conjugate_kraus(ch);
    for (double p : {2.0, kInf}) {
      EXPECT_NEAR(nu_p(ch, p, opts_with(12)).value, nu_p(conj, p, opts_with(12)).value,
                  1e-7);
    }
  });
}

TEST(Purity, SpectrumPairCheck) {
  Rng rng(13);
  const KrausChannel ch = random_channel(3, 2, 4, rng);
  const SpectrumPair s = spectrum_pair_check(ch, random_pure_state(3, rng));
  EXPECT_LT(s.max_deviation, 1e-12);
  EXPECT_EQ(s.channel.size(), s.conjugate.size());
}

TEST(Purity, IdentityFactorIsMultiplicative) {
  Rng rng(14);
  const KrausChannel ch = random_channel(2, 2, 2, rng);
  const GapReport gap = multiplicativity_gap(identity_channel(2), ch, 2.0, opts_with(15, 8));
  EXPECT_NEAR(gap.gap, 0.0, 1e-8);
  EXPECT_FALSE(gap.witness_state.has_value());
  const GapReport add = additivity_gap_entropy(identity_channel(2), ch, opts_with(15, 8));
  EXPECT_NEAR(add.gap, 0.0, 1e-6);
}

TEST(Purity, HolevoCapacityOfDepolarizingQubit) {
  const PauliDiagonalChannel dep = depolarizing(build_basis(2), 0.6);
  // Weights 0.6 + 0.4/4 on identity shrink the Bloch vector by 0.6.
  EXPECT_NEAR(holevo_capacity_weyl(dep, opts_with(16)), 1.0 - qcc_test::h2(0.8), 1e-8);
}

}  // namespace
