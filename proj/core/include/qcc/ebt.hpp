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


// Entanglement-breaking channels in rank-one Kraus form, their conjugates
// (Hadamard-form channels) and the converse detection.

#pragma once

#include <vector>

#include "qcc/channel.hpp"

namespace qcc {

/// Kraus operators |x_k><w_k| with sum_k <x_k|x_k> |w_k><w_k| = I.
class EBTChannel {
 public:
  /// Throws ValidationError when the completeness relation fails by more
  /// than tol, DimensionError on ragged input.
  EBTChannel(std::vector<Vector> x, std::vector<Vector> w,
             double tol = kTraceTol);

  const std::vector<Vector>& x() const { return x_; }
  const std::vector<Vector>& w() const { return w_; }
  int d_in() const { return static_cast<int>(w_[0].size()); }
  int d_out() const { return static_cast<int>(x_[0].size()); }
  const KrausChannel& channel() const { return channel_; }

 private:
  std::vector<Vector> x_;
  std::vector<Vector> w_;
  KrausChannel channel_;
};

/// rho -> gram o W_rho with (W_rho)_jk = <w_j|rho|w_k>.
struct HadamardChannel {
  Matrix gram;
  std::vector<Vector> frame;
};

Matrix hadamard_apply(const HadamardChannel& h, const Matrix& rho);

struct EbtConjugate {
  HadamardChannel form;   // gram_jk = <x_k|x_j>
  KrausChannel channel;   // conjugate_kraus of the rank-one list
};

EbtConjugate conjugate_ebt(const EBTChannel& ebt);

/// R_m = sum_j c_jm |e_j><w_j| with C C^dagger = gram from a truncated
/// eigen square root; the number of operators is rank(gram).
KrausChannel pseudodiag_kraus(const EBTChannel& ebt, double tol = kZeroTol);
KrausChannel pseudodiag_kraus(const HadamardChannel& h, double tol = kZeroTol);

enum class Verdict { Yes, No, Ambiguous };
std::string to_string(Verdict v);

struct HadamardDetection {
  Verdict verdict = Verdict::No;
  /// Filled for Yes/Ambiguous: the frame is scaled so gram has unit
  /// diagonal on every used output index.
  std::vector<Vector> frame;
  Matrix gram;
  bool orthonormal_frame = false;
  /// Largest sigma_2 / sigma_1 over the stacked output rows.
  double worst_ratio = 0.0;
};

/// Tests whether row j of every Kraus operator is proportional to a common
/// covector w_j^dagger. Ratios up to tol give Yes, up to 100 tol Ambiguous.
HadamardDetection is_hadamard_form(const KrausChannel& channel,
                                   double tol = 1e-8);

struct EbtReconstruction {
  bool rank_one = false;
  std::vector<Vector> x;
  std::vector<Vector> w;
  double residual = 0.0;  // max_k ||F_k - x_k w_k^dagger||_F
};

/// Reads off x_k, w_k when every Kraus operator has rank at most one.
EbtReconstruction as_ebt(const KrausChannel& channel, double tol = 1e-8);

/// Rank-one POVM from a Haar isometry and Haar-random unit x_k.
EBTChannel random_ebt(int d_in, int d_out, int n, Rng& rng);
/// Orthonormal w_k (a Haar basis of C^d_in) and random unit x_k.
EBTChannel random_extreme_cq(int d_in, int d_out, Rng& rng);
/// Random correlation matrix (PSD, unit diagonal) with a Haar orthonormal
/// frame.
HadamardChannel random_hadamard(int d, Rng& rng);

}  // namespace qcc
