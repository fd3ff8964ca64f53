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


#include "qcc/ebt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcc/conjugate.hpp"
#include "qcc/error.hpp"

namespace qcc {

namespace {

KrausChannel rank_one_kraus(const std::vector<Vector>& x,
                            const std::vector<Vector>& w, double tol) {
  if (x.empty() || x.size() != w.size()) {
    throw DimensionError("EBT channel needs equally many x_k and w_k (>0)");
  }
  const auto d_out = x[0].size();
  const auto d_in = w[0].size();
  std::vector<Matrix> kraus;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].size() != d_out || w[k].size() != d_in) {
      throw DimensionError("EBT channel vectors have inconsistent lengths");
    }
    kraus.push_back(x[k] * w[k].adjoint());
  }
  const CptReport report = validate_cpt(kraus, static_cast<int>(d_in), tol);
  if (!report.tp_ok) {
    throw ValidationError(
        "EBT channel: sum <x_k|x_k> |w_k><w_k| differs from I by " +
        std::to_string(report.max_residual));
  }
  return KrausChannel(static_cast<int>(d_in), static_cast<int>(d_out),
                      std::move(kraus), tol);
}

Matrix frame_matrix(const std::vector<Vector>& frame) {
  Matrix omega(frame[0].size(), static_cast<Eigen::Index>(frame.size()));
  for (std::size_t j = 0; j < frame.size(); ++j) omega.col(j) = frame[j];
  return omega;
}

}  // namespace

EBTChannel::EBTChannel(std::vector<Vector> x, std::vector<Vector> w,
                       double tol)
    : x_(std::move(x)), w_(std::move(w)), channel_(rank_one_kraus(x_, w_, tol)) {}

Matrix hadamard_apply(const HadamardChannel& h, const Matrix& rho) {
  const Matrix omega = frame_matrix(h.frame);
  return hadamard_product(h.gram, omega.adjoint() * rho * omega);
}

EbtConjugate conjugate_ebt(const EBTChannel& ebt) {
  const auto n = static_cast<Eigen::Index>(ebt.x().size());
  HadamardChannel form;
  form.frame = ebt.w();
  form.gram.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      form.gram(j, k) = ebt.x()[k].dot(ebt.x()[j]);  // <x_k|x_j>
    }
  }
  return EbtConjugate{std::move(form), conjugate_kraus(ebt.channel())};
}

KrausChannel pseudodiag_kraus(const HadamardChannel& h, double tol) {
  const auto n = static_cast<Eigen::Index>(h.frame.size());
  if (h.gram.rows() != n || h.gram.cols() != n || n == 0) {
    throw DimensionError("pseudodiag_kraus: gram and frame sizes differ");
  }
  const HermitianEigen eig = canonical_hermitian_eigen(h.gram);
  const double top = eig.values(0);
  std::vector<Matrix> kraus;
  const Eigen::Index d_in = h.frame[0].size();
  for (Eigen::Index m = 0; m < n; ++m) {
    if (!(eig.values(m) > tol * top)) break;
    const Vector c = std::sqrt(eig.values(m)) * eig.vectors.col(m);
    Matrix r = Matrix::Zero(n, d_in);
    for (Eigen::Index j = 0; j < n; ++j) {
      r.row(j) = c(j) * h.frame[j].adjoint();
    }
    kraus.push_back(std::move(r));
  }
  return KrausChannel(static_cast<int>(d_in), static_cast<int>(n),
                      std::move(kraus), 1e-9);
}

KrausChannel pseudodiag_kraus(const EBTChannel& ebt, double tol) {
  return pseudodiag_kraus(conjugate_ebt(ebt).form, tol);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::Ambiguous:
      return "ambiguous";
    case Verdict::No:
      break;
  }
  return "no";
}

HadamardDetection is_hadamard_form(const KrausChannel& channel, double tol) {
  const int d_out = channel.d_out();
  const int d_in = channel.d_in();
  const auto n = static_cast<Eigen::Index>(channel.size());
  HadamardDetection out;
  Matrix coeff = Matrix::Zero(d_out, n);  // c_{jm}
  double scale = 0.0;
  for (const auto& f : channel.kraus()) scale = std::max(scale, max_abs(f));
  for (int j = 0; j < d_out; ++j) {
    Matrix rows(n, d_in);
    for (Eigen::Index m = 0; m < n; ++m) rows.row(m) = channel[m].row(j);
    const Svd s = svd(rows);
    Vector w = Vector::Zero(d_in);
    if (s.singular_values(0) > 1e-12 * std::max(scale, 1e-300)) {
      if (s.singular_values.size() > 1) {
        out.worst_ratio = std::max(
            out.worst_ratio, s.singular_values(1) / s.singular_values(0));
      }
      // rows = sigma u v^dagger = c_j w_j^dagger with c_j = u, w_j = sigma v
      w = s.singular_values(0) * s.v.col(0);
      coeff.row(j) = s.u.col(0).transpose();
    }
    out.frame.push_back(w);
  }
  if (out.worst_ratio <= tol) {
    out.verdict = Verdict::Yes;
  } else if (out.worst_ratio <= 100.0 * tol) {
    out.verdict = Verdict::Ambiguous;
  } else {
    out.verdict = Verdict::No;
    out.frame.clear();
    return out;
  }
  out.gram = coeff * coeff.adjoint();
  const Matrix omega = frame_matrix(out.frame);
  out.orthonormal_frame =
      max_abs(omega.adjoint() * omega - identity(d_out)) < 1e-8;
  return out;
}

EbtReconstruction as_ebt(const KrausChannel& channel, double tol) {
  EbtReconstruction out;
  out.rank_one = true;
  for (const auto& f : channel.kraus()) {
    const Svd s = svd(f);
    const double top = s.singular_values(0);
    if (!(top > 1e-14)) continue;
    if (s.singular_values.size() > 1 && s.singular_values(1) > tol * top) {
      out.rank_one = false;
    }
    const Vector x = top * s.u.col(0);
    const Vector w = s.v.col(0);
    out.residual = std::max(out.residual, (f - x * w.adjoint()).norm());
    out.x.push_back(x);
    out.w.push_back(w);
  }
  if (!out.rank_one) {
    out.x.clear();
    out.w.clear();
  }
  return out;
}

EBTChannel random_ebt(int d_in, int d_out, int n, Rng& rng) {
  if (n < d_in) throw DimensionError("random_ebt: need n >= d_in");
  const Matrix v = random_isometry(n, d_in, rng);
  std::vector<Vector> x;
  std::vector<Vector> w;
  for (int k = 0; k < n; ++k) {
    w.push_back(v.row(k).adjoint());
    x.push_back(random_pure_state(d_out, rng));
  }
  return EBTChannel(std::move(x), std::move(w));
}

EBTChannel random_extreme_cq(int d_in, int d_out, Rng& rng) {
  const Matrix u = haar_unitary(d_in, rng);
  std::vector<Vector> x;
  std::vector<Vector> w;
  for (int k = 0; k < d_in; ++k) {
    w.push_back(u.col(k));
    x.push_back(random_pure_state(d_out, rng));
  }
  return EBTChannel(std::move(x), std::move(w));
}

HadamardChannel random_hadamard(int d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  Matrix gram = g * g.adjoint();
  const RealVector diag = gram.diagonal().real().cwiseSqrt().cwiseInverse();
  gram = diag.asDiagonal() * gram * diag.asDiagonal();
  for (int j = 0; j < d; ++j) gram(j, j) = 1.0;
  HadamardChannel h;
  h.gram = gram;
  const Matrix u = haar_unitary(d, rng);
  for (int j = 0; j < d; ++j) h.frame.push_back(u.col(j));
  return h;
}

}  // namespace qcc
