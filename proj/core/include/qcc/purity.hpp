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


// Maximal output p-norm and minimal output entropy of a channel, estimated
// by multistart local ascent over pure input states.
//
// Reported values are achieved by the returned state: a lower bound on nu_p
// and an upper bound on S_min. Global optimality is never claimed.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qcc/channel.hpp"

namespace qcc {

class PauliDiagonalChannel;

struct PurityOptions {
  int restarts = 32;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int max_iter = 2000;
  int threads = 1;
  LogBase base = LogBase::Two;
  /// Extra starting points tried before the random restarts.
  std::vector<Vector> initial_states;
};

struct PurityReport {
  double value = 0.0;
  Vector optimizer_state;
  double p = 1.0;  // 0 for the entropy functional
  int restarts = 0;
  bool converged = false;
  int iterations = 0;
};

/// ||Phi(psi psi^dagger)||_p; p may be kInf.
double output_p_norm(const KrausChannel& channel, const Vector& psi, double p);
double output_entropy(const KrausChannel& channel, const Vector& psi,
                      LogBase base = LogBase::Two);

/// Throws ValidationError for p < 1.
PurityReport nu_p(const KrausChannel& channel, double p,
                  const PurityOptions& opts = {});
PurityReport s_min(const KrausChannel& channel,
                   const PurityOptions& opts = {});

struct SpectrumPair {
  Spectrum channel;
  Spectrum conjugate;
  double max_deviation = 0.0;
};

/// Nonzero output spectra of Phi and Phi^C on psi psi^dagger.
SpectrumPair spectrum_pair_check(const KrausChannel& channel,
                                 const Vector& psi, double tol = kZeroTol);

struct GapReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  std::optional<Vector> witness_state;
};

/// lhs = nu_p(Phi1 (x) Phi2), rhs = nu_p(Phi1) nu_p(Phi2), gap = lhs - rhs.
/// The product of the single-channel optimizers is always among the starting
/// points, so gap >= -tol up to rounding. A witness is attached when
/// gap > witness_tol.
GapReport multiplicativity_gap(const KrausChannel& a, const KrausChannel& b,
                               double p, const PurityOptions& opts = {},
                               double witness_tol = 1e-6);
/// lhs = S_min(Phi1 (x) Phi2), rhs = S_min(Phi1) + S_min(Phi2),
/// gap = rhs - lhs.
GapReport additivity_gap_entropy(const KrausChannel& a, const KrausChannel& b,
                                 const PurityOptions& opts = {},
                                 double witness_tol = 1e-6);

/// log d - S_min for a Weyl-covariant (Pauli-diagonal) channel.
double holevo_capacity_weyl(const PauliDiagonalChannel& channel,
                            const PurityOptions& opts = {});

}  // namespace qcc
