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


#include "qcc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcc/error.hpp"

namespace qcc {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square_dim(const Matrix& m, int d, const char* what) {
  if (m.rows() != d || m.cols() != d) {
    throw DimensionError(std::string(what) + ": expected " +
                         std::to_string(d) + "x" + std::to_string(d) +
                         " operand, got " + shape(m));
  }
}

Matrix completeness_defect(std::span<const Matrix> kraus, int d_in) {
  Matrix sum = Matrix::Zero(d_in, d_in);
  for (const auto& f : kraus) sum += f.adjoint() * f;
  return sum - identity(d_in);
}

}  // namespace

KrausChannel::KrausChannel(int d_in, int d_out, std::vector<Matrix> kraus,
                           double tp_tol)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
  if (d_in_ <= 0 || d_out_ <= 0) {
    throw DimensionError("KrausChannel: dimensions must be positive");
  }
  if (kraus_.empty()) {
    throw ValidationError("KrausChannel: empty Kraus list");
  }
  for (std::size_t k = 0; k < kraus_.size(); ++k) {
    if (kraus_[k].rows() != d_out_ || kraus_[k].cols() != d_in_) {
      throw DimensionError("KrausChannel: operator " + std::to_string(k) +
                           " is " + shape(kraus_[k]) + ", expected " +
                           std::to_string(d_out_) + "x" +
                           std::to_string(d_in_));
    }
    if (!kraus_[k].allFinite()) {
      throw ValidationError("KrausChannel: operator " + std::to_string(k) +
                            " has non-finite entries");
    }
  }
  const CptReport report = validate_cpt(kraus_, d_in_, tp_tol);
  if (!report.tp_ok) {
    throw ValidationError(
        "KrausChannel: not trace preserving, ||sum F^dagger F - I|| = " +
        std::to_string(report.max_residual));
  }
}

CptReport validate_cpt(std::span<const Matrix> kraus, int d_in, double tol) {
  CptReport report;
  if (kraus.empty()) {
    report.max_residual = 1.0;
    return report;
  }
  for (const auto& f : kraus) {
    if (f.cols() != d_in || !f.allFinite()) {
      report.max_residual = kInf;
      return report;
    }
  }
  report.max_residual = schatten_norm(completeness_defect(kraus, d_in), kInf);
  report.tp_ok = report.max_residual < tol;
  return report;
}

CptReport validate_cpt(const KrausChannel& channel, double tol) {
  return validate_cpt(channel.kraus(), channel.d_in(), tol);
}

void validate_choi(const ChoiMatrix& choi, double tol) {
  const int n = choi.d_in * choi.d_out;
  if (choi.d_in <= 0 || choi.d_out <= 0 || choi.gamma.rows() != n ||
      choi.gamma.cols() != n) {
    throw DimensionError("Choi matrix is " + shape(choi.gamma) +
                         ", dims (" + std::to_string(choi.d_in) + "," +
                         std::to_string(choi.d_out) + ")");
  }
  if (hermiticity_defect(choi.gamma) > tol) {
    throw ValidationError("Choi matrix is not Hermitian");
  }
  const RealVector lam = eigenvalues_hermitian(choi.gamma);
  if (lam(lam.size() - 1) < -tol) {
    throw NotCompletelyPositiveError("Choi matrix has eigenvalue " +
                                     std::to_string(lam(lam.size() - 1)));
  }
  const Matrix marginal =
      partial_trace(choi.gamma, choi.d_in, choi.d_out, Keep::A);
  const double defect =
      max_abs(marginal - identity(choi.d_in) / static_cast<double>(choi.d_in));
  if (defect > tol) {
    throw ValidationError("Choi marginal differs from I/d by " +
                          std::to_string(defect));
  }
}

Matrix apply_channel(const KrausChannel& channel, const Matrix& rho) {
  require_square_dim(rho, channel.d_in(), "apply");
  Matrix out = Matrix::Zero(channel.d_out(), channel.d_out());
  for (const auto& f : channel.kraus()) out += f * rho * f.adjoint();
  return out;
}

Matrix adjoint_apply(const KrausChannel& channel, const Matrix& a) {
  require_square_dim(a, channel.d_out(), "adjoint_apply");
  Matrix out = Matrix::Zero(channel.d_in(), channel.d_in());
  for (const auto& f : channel.kraus()) out += f.adjoint() * a * f;
  return out;
}

KrausChannel identity_channel(int d) {
  return KrausChannel(d, d, {identity(d)});
}

KrausChannel unitary_channel(const Matrix& u) {
  return KrausChannel(static_cast<int>(u.cols()), static_cast<int>(u.rows()),
                      {u});
}

KrausChannel completely_noisy_channel(int d) {
  std::vector<Matrix> kraus;
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) kraus.push_back(s * matrix_unit(d, d, j, k));
  }
  return KrausChannel(d, d, std::move(kraus));
}

KrausChannel channel_from_isometry(const Matrix& v, int d_out, int n) {
  if (d_out <= 0 || n <= 0 || v.rows() != static_cast<Eigen::Index>(d_out) * n) {
    throw DimensionError("channel_from_isometry: isometry is " + shape(v));
  }
  const int d_in = static_cast<int>(v.cols());
  std::vector<Matrix> kraus(n, Matrix::Zero(d_out, d_in));
  for (int m = 0; m < d_out; ++m) {
    for (int k = 0; k < n; ++k) kraus[k].row(m) = v.row(m * n + k);
  }
  return KrausChannel(d_in, d_out, std::move(kraus));
}

KrausChannel random_channel(int d_in, int d_out, int n_kraus, Rng& rng) {
  if (d_out * n_kraus < d_in) {
    throw DimensionError("random_channel: d_out * n_kraus < d_in");
  }
  return channel_from_isometry(random_isometry(d_out * n_kraus, d_in, rng),
                               d_out, n_kraus);
}

ChoiMatrix kraus_to_choi(const KrausChannel& channel) {
  const int d_in = channel.d_in();
  const int d_out = channel.d_out();
  // Gamma = sum_k |v_k><v_k| / d_in with v_k[j * d_out + m] = F_k(m, j).
  Matrix vecs(d_in * d_out, static_cast<Eigen::Index>(channel.size()));
  for (std::size_t k = 0; k < channel.size(); ++k) {
    const Matrix& f = channel[k];
    for (int j = 0; j < d_in; ++j) {
      for (int m = 0; m < d_out; ++m) vecs(j * d_out + m, k) = f(m, j);
    }
  }
  return ChoiMatrix{d_in, d_out,
                    vecs * vecs.adjoint() / static_cast<double>(d_in)};
}

KrausChannel choi_to_kraus(const ChoiMatrix& choi, double tol) {
  validate_choi(choi, std::max(tol, kTraceTol));
  const int d_in = choi.d_in;
  const int d_out = choi.d_out;
  const HermitianEigen eig = canonical_hermitian_eigen(choi.gamma);
  const double top = eig.values(0);
  std::vector<Matrix> kraus;
  double dropped = 0.0;
  for (Eigen::Index mu = 0; mu < eig.values.size(); ++mu) {
    const double lam = eig.values(mu);
    if (lam <= tol * top) {
      dropped += std::abs(lam);
      continue;
    }
    const double scale = std::sqrt(d_in * lam);
    Matrix g(d_out, d_in);
    for (int j = 0; j < d_in; ++j) {
      for (int m = 0; m < d_out; ++m) {
        g(m, j) = scale * eig.vectors(j * d_out + m, mu);
      }
    }
    kraus.push_back(std::move(g));
  }
  return KrausChannel(d_in, d_out, std::move(kraus),
                      kTraceTol + d_in * dropped);
}

int kraus_rank(const KrausChannel& channel, double tol) {
  const RealVector lam = eigenvalues_hermitian(kraus_to_choi(channel).gamma);
  int rank = 0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam(i) > tol * lam(0)) ++rank;
  }
  return rank;
}

AncillaRep kraus_to_ancilla(const KrausChannel& channel) {
  AncillaRep rep;
  rep.d_in = channel.d_in();
  rep.d_out = channel.d_out();
  rep.env_dim = static_cast<int>(channel.size());
  rep.v = Matrix::Zero(rep.d_out * rep.env_dim, rep.d_in);
  for (int k = 0; k < rep.env_dim; ++k) {
    for (int m = 0; m < rep.d_out; ++m) {
      rep.v.row(m * rep.env_dim + k) = channel[k].row(m);
    }
  }
  return rep;
}

Matrix ancilla_apply(const AncillaRep& rep, const Matrix& rho) {
  require_square_dim(rho, rep.d_in, "ancilla_apply");
  return partial_trace(rep.v * rho * rep.v.adjoint(), rep.d_out, rep.env_dim,
                       Keep::A);
}

Matrix dilation_operator(const AncillaRep& rep) {
  if (rep.env_state_index < 0 || rep.env_state_index >= rep.env_dim) {
    throw DimensionError("dilation_operator: env_state_index out of range");
  }
  Matrix u = Matrix::Zero(rep.d_out * rep.env_dim, rep.d_in * rep.env_dim);
  for (int j = 0; j < rep.d_in; ++j) {
    u.col(j * rep.env_dim + rep.env_state_index) = rep.v.col(j);
  }
  return u;
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.d_in() != b.d_in() || a.d_out() != b.d_out()) {
    throw DimensionError("choi_distance: channels have different shapes");
  }
  return (kraus_to_choi(a).gamma - kraus_to_choi(b).gamma).norm();
}

bool same_channel(const KrausChannel& a, const KrausChannel& b, double tol) {
  if (a.d_in() != b.d_in() || a.d_out() != b.d_out()) return false;
  return choi_distance(a, b) < tol;
}

KrausRelation relate_kraus_sets(const KrausChannel& f, const KrausChannel& g,
                                double tol) {
  const double distance = choi_distance(f, g);
  if (!(distance < tol)) {
    throw MismatchError("relate_kraus_sets: channels differ (Choi distance " +
                        std::to_string(distance) + ")");
  }
  const Eigen::Index len = static_cast<Eigen::Index>(f.d_in()) * f.d_out();
  const auto kappa = static_cast<Eigen::Index>(g.size());
  const auto n = static_cast<Eigen::Index>(f.size());
  Matrix gv(len, kappa);
  Matrix fv(len, n);
  for (Eigen::Index k = 0; k < kappa; ++k) gv.col(k) = vec_row_major(g[k]);
  for (Eigen::Index j = 0; j < n; ++j) fv.col(j) = vec_row_major(f[j]);
  if (numerical_rank(gv, 1e-8) != kappa) {
    throw ValidationError(
        "relate_kraus_sets: reference Kraus operators are not linearly "
        "independent");
  }
  // Least squares; for orthogonal G this is <G_k, F_j> / ||G_k||^2.
  KrausRelation rel;
  rel.w = gv.colPivHouseholderQr().solve(fv).transpose();
  rel.rank = numerical_rank(rel.w, 1e-8);
  const Matrix fit = gv * rel.w.transpose();
  for (Eigen::Index j = 0; j < n; ++j) {
    rel.residual = std::max(rel.residual, (fit.col(j) - fv.col(j)).norm());
  }
  return rel;
}

KrausChannel tensor(const KrausChannel& a, const KrausChannel& b) {
  std::vector<Matrix> kraus;
  kraus.reserve(a.size() * b.size());
  for (const auto& fa : a.kraus()) {
    for (const auto& fb : b.kraus()) kraus.push_back(kron(fa, fb));
  }
  const double tol =
      kTraceTol * static_cast<double>(std::max<std::size_t>(
                      1, std::max(a.size(), b.size())));
  return KrausChannel(a.d_in() * b.d_in(), a.d_out() * b.d_out(),
                      std::move(kraus), tol);
}

}  // namespace qcc
