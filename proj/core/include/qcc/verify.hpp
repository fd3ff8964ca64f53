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


// Randomised property checks over every module. Each check draws its own
// random stream from (seed, check name, trial), so results do not depend
// on the thread count or on which other checks ran.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcc::verify {

struct Check {
  std::string name;
  bool pass = true;
  int passed = 0;
  int trials = 0;
  /// Largest observed error statistic, compared against threshold.
  double worst = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Trials per check; 0 keeps each check's default.
  int trials = 0;
  int threads = 1;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

std::vector<std::string> suite_names();
/// Throws ValidationError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);
std::vector<SuiteResult> run_all(const SuiteConfig& config);

// Individual checks. `trials` counts random instances.

/// Output spectra of Phi and Phi^C agree on random pure inputs.
Check spectrum_law(std::uint64_t seed, int channels = 200, int inputs = 5,
                   int threads = 1);
/// Kraus, Choi and ancilla conjugates are pairwise related by partial
/// isometries.
Check conjugate_routes(std::uint64_t seed, int channels = 50,
                       int threads = 1);
Check double_conjugate(std::uint64_t seed, int channels = 20,
                       int threads = 1);
Check conjugate_tensor_compatibility(std::uint64_t seed, int channels = 10,
                                     int threads = 1);
/// nu_p and S_min of Phi and Phi^C agree for random qubit channels.
Check nu_conjugate_agreement(std::uint64_t seed, int channels = 20,
                             int threads = 1);
/// Pauli qubit channels on a grid of weights against the closed form.
Check qubit_closed_form(int grid = 20, int threads = 1);
/// Depolarizing channels: multiplicativity at p = 2 and the majorization
/// bound (attained for one copy, strict for two).
Check depolarizing_bounds();
Check noisy_conjugate_unitary(std::uint64_t seed, int trials = 50);
Check nc_properties_check(std::uint64_t seed, int d, int trials = 100);
Check nc_explicit_check(std::uint64_t seed, int trials = 50);
Check nu2_bound_check(std::uint64_t seed, int trials = 100,
                      int threads = 1);
Check axes_closed_form(std::uint64_t seed, int trials = 20, int threads = 1);
Check gl_identities(std::uint64_t seed, int trials = 20);
Check cq_conjugate_hadamard(std::uint64_t seed, int trials = 20);
Check hadamard_conjugate_ebt(std::uint64_t seed, int trials = 20);
Check hadamard_multiplicativity(std::uint64_t seed, int pairs = 10,
                                int threads = 1);

}  // namespace qcc::verify
