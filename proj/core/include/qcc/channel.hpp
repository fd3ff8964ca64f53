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


// Quantum channels in Kraus, Choi and ancilla (Stinespring) form.
//
// Conventions used throughout the library:
//  * A Kraus operator F maps C^d_in to C^d_out (d_out x d_in matrix).
//  * The Choi matrix is normalised, Gamma = (1/d_in) sum_jk E_jk (x) Phi(E_jk),
//    with the input copy as the first tensor factor, so Tr_B Gamma = I/d_in.
//  * The ancilla isometry is V = sum_k F_k (x) |e_k>, i.e. row m*env + k of V
//    is row m of F_k.

#pragma once

#include <span>
#include <vector>

#include "qcc/numkit.hpp"
#include "qcc/random.hpp"

namespace qcc {

/// Trace-preserving tolerance applied when constructing a KrausChannel.
inline constexpr double kTraceTol = 1e-10;

class KrausChannel {
 public:
  /// Throws DimensionError for shape problems and ValidationError when the
  /// list is empty, contains non-finite entries or is not trace preserving.
  KrausChannel(int d_in, int d_out, std::vector<Matrix> kraus,
               double tp_tol = kTraceTol);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  std::size_t size() const { return kraus_.size(); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const Matrix& operator[](std::size_t k) const { return kraus_[k]; }

 private:
  int d_in_;
  int d_out_;
  std::vector<Matrix> kraus_;
};

struct ChoiMatrix {
  int d_in = 0;
  int d_out = 0;
  Matrix gamma;
};

struct AncillaRep {
  int d_in = 0;
  int d_out = 0;
  int env_dim = 0;
  Matrix v;  // (d_out * env_dim) x d_in
  int env_state_index = 0;
};

struct KrausRelation {
  Matrix w;
  int rank = 0;
  double residual = 0.0;
};

struct CptReport {
  bool cp_ok = true;
  bool tp_ok = false;
  double max_residual = 0.0;
};

/// ||sum F^dagger F - I||_inf against `tol`; never throws on bad values.
CptReport validate_cpt(std::span<const Matrix> kraus, int d_in,
                       double tol = kTraceTol);
CptReport validate_cpt(const KrausChannel& channel, double tol = kTraceTol);

/// Checks the marginal condition and positivity of a Choi matrix.
/// Throws NotCompletelyPositiveError or ValidationError.
void validate_choi(const ChoiMatrix& choi, double tol = kTraceTol);

Matrix apply_channel(const KrausChannel& channel, const Matrix& rho);
Matrix adjoint_apply(const KrausChannel& channel, const Matrix& a);

KrausChannel identity_channel(int d);
KrausChannel unitary_channel(const Matrix& u);
/// rho -> Tr(rho) I/d, with Kraus operators E_jk / sqrt(d).
KrausChannel completely_noisy_channel(int d);
/// Kraus operators read off the row blocks of an isometry
/// ((d_out * n) x d_in, row m*n + k goes to F_k).
KrausChannel channel_from_isometry(const Matrix& v, int d_out, int n);
/// Random channel with `n_kraus` operators from a Haar isometry.
KrausChannel random_channel(int d_in, int d_out, int n_kraus, Rng& rng);

ChoiMatrix kraus_to_choi(const KrausChannel& channel);
/// Minimal Kraus form from the canonical eigendecomposition of Gamma:
/// G_mu(m, j) = sqrt(d_in * lambda_mu) z_mu[j * d_out + m]. Eigenvalues below
/// tol * lambda_max are dropped; one below -tol throws
/// NotCompletelyPositiveError.
KrausChannel choi_to_kraus(const ChoiMatrix& choi, double tol = kZeroTol);
int kraus_rank(const KrausChannel& channel, double tol = kZeroTol);

AncillaRep kraus_to_ancilla(const KrausChannel& channel);
/// Tr_C[V rho V^dagger].
Matrix ancilla_apply(const AncillaRep& rep, const Matrix& rho);
/// Partial isometry U from C^d_in (x) C^env to C^d_out (x) C^env with
/// U(psi (x) e_s) = V psi for s = env_state_index and 0 otherwise.
Matrix dilation_operator(const AncillaRep& rep);

/// Frobenius distance between Choi matrices; throws DimensionError when the
/// channels have different shapes.
double choi_distance(const KrausChannel& a, const KrausChannel& b);
bool same_channel(const KrausChannel& a, const KrausChannel& b,
                  double tol = 1e-8);

/// W with F_j = sum_k W(j, k) G_k, where `g` must have linearly independent
/// Kraus operators. Throws MismatchError when the channels differ.
KrausRelation relate_kraus_sets(const KrausChannel& f, const KrausChannel& g,
                                double tol = 1e-8);

/// Kraus operators F1_i (x) F2_j in order i * n2 + j.
KrausChannel tensor(const KrausChannel& a, const KrausChannel& b);

}  // namespace qcc
