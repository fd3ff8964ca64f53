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


// Linearisation operators for integer p-norms: Tr Phi(rho)^p written as
// Tr(rho^{(x)p} X) for a fixed operator X on p copies of the input.

#pragma once

#include "qcc/channel.hpp"

namespace qcc {

enum class ShiftDirection { Left, Right };

/// Permutation of p tensor factors of C^d: Left maps |k1 ... kp> to
/// |k2 ... kp k1>, Right is its inverse. Factor 1 is the most significant
/// index.
Matrix shift_operator(int p, ShiftDirection direction, int d);

/// sum over (k1..kp) of A_k1^dagger A_k2 (x) A_k2^dagger A_k3 (x) ...
/// (x) A_kp^dagger A_k1. Linearises Tr Phi(rho)^p on pure inputs only.
Matrix theta(const KrausChannel& channel, int p);

/// Dual channel applied factorwise to the left shift on p output copies.
/// Linearises Tr Phi(rho)^p on every input.
Matrix omega(const KrausChannel& channel, int p);

struct GlResiduals {
  double res1 = 0.0;  // ||Omega(Phi) - Theta(Phi^C)^dagger||_F
  double res2 = 0.0;  // ||Omega(Phi) - Theta(Phi) L_p||_F
};

/// Phi^C is taken from conjugate_kraus of the same Kraus list.
GlResiduals verify_gl_identity(const KrausChannel& channel, int p);

/// Tr(rho^{(x)p} op).
Complex linearised_value(const Matrix& rho, const Matrix& op, int p);
/// Tr Phi(rho)^p.
double output_power_trace(const KrausChannel& channel, const Matrix& rho,
                          int p);

struct ThetaViolation {
  bool found = false;
  Matrix rho;
  double deviation = 0.0;  // |Tr Phi(rho)^p - Tr(rho^{(x)p} Theta)|
  int tries = 0;
};

/// Draws random mixed states until Theta misses Tr Phi(rho)^p by more than
/// threshold.
ThetaViolation find_theta_violation(const KrausChannel& channel, int p,
                                    Rng& rng, double threshold = 1e-3,
                                    int max_tries = 1000);

}  // namespace qcc
