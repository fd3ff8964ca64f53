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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcc/numkit.hpp"

namespace qcc {

/// Seedable generator with a bit-exact stream on every platform.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are implemented here rather than taken from
/// <random>, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n);
  /// Standard normal (Box-Muller, caching the second variate).
  double normal();
  /// Circular complex normal with E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Deterministic child seed for stream `counter` of `base` (SplitMix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

Matrix ginibre(int rows, int cols, Rng& rng);
/// Haar unitary via QR of a Ginibre matrix, phases fixed so diag(R) > 0.
Matrix haar_unitary(int n, Rng& rng);
/// First `cols` columns of a Haar unitary of size `rows`.
Matrix random_isometry(int rows, int cols, Rng& rng);
Vector random_pure_state(int d, Rng& rng);
/// Full-rank mixed state G G^dagger / Tr(G G^dagger) with G Ginibre d x rank.
Matrix random_density_matrix(int d, Rng& rng, int rank = -1);
Matrix random_hermitian(int n, Rng& rng);
/// Uniform point on the probability simplex.
std::vector<double> random_probability_vector(int n, Rng& rng);

}  // namespace qcc
