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


// Conjugate (complementary) channels: the map to the environment of a
// Stinespring dilation, built from Kraus, Choi or ancilla data.

#pragma once

#include "qcc/channel.hpp"

namespace qcc {

/// Index swap (R_mu)(j, k) = (F_j)(mu, k): d_out(Phi) Kraus operators of
/// size n x d_in, where n is the Kraus count of Phi.
KrausChannel conjugate_kraus(const KrausChannel& channel);

/// Purifies Gamma_AB through its canonical eigendecomposition and traces out
/// B. The environment dimension is the Choi rank.
ChoiMatrix conjugate_choi(const ChoiMatrix& choi, double tol = kZeroTol);

/// rho -> Tr_B[V rho V^dagger], in Kraus form.
KrausChannel conjugate_ancilla(const AncillaRep& rep);

/// Partial isometry W with c1(rho) = W c2(rho) W^dagger and
/// c2(rho) = W^dagger c1(rho) W. Both channels must share d_in. Throws
/// MismatchError when no such W exists within tol.
KrausRelation find_relating_isometry(const KrausChannel& c1,
                                     const KrausChannel& c2,
                                     double tol = 1e-8);

/// Max residual of c1(E_jk) - W c2(E_jk) W^dagger over all matrix units.
double isometry_residual(const KrausChannel& c1, const KrausChannel& c2,
                         const Matrix& w);

}  // namespace qcc
