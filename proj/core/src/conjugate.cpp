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


#include "qcc/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcc/error.hpp"
#include "qcc/random.hpp"

namespace qcc {

namespace {

// Orthonormal basis (columns) of the range of a PSD matrix.
Matrix support_basis(const Matrix& sigma) {
  const HermitianEigen eig = canonical_hermitian_eigen(sigma);
  const double top = eig.values(0);
  Eigen::Index r = 0;
  while (r < eig.values.size() && eig.values(r) > 1e-10 * top) ++r;
  return eig.vectors.leftCols(r);
}

// Polar factor of a square matrix: the unitary u v^dagger.
Matrix polar_unitary(const Matrix& t) {
  const Svd s = svd(t);
  return s.u * s.v.adjoint();
}

}  // namespace

KrausChannel conjugate_kraus(const KrausChannel& channel) {
  const int n = static_cast<int>(channel.size());
  const int d_in = channel.d_in();
  std::vector<Matrix> out(channel.d_out(), Matrix::Zero(n, d_in));
  for (int mu = 0; mu < channel.d_out(); ++mu) {
    for (int j = 0; j < n; ++j) out[mu].row(j) = channel[j].row(mu);
  }
  return KrausChannel(d_in, n, std::move(out));
}

ChoiMatrix conjugate_choi(const ChoiMatrix& choi, double tol) {
  validate_choi(choi, std::max(tol, kTraceTol));
  const int d_in = choi.d_in;
  const int d_out = choi.d_out;
  const HermitianEigen eig = canonical_hermitian_eigen(choi.gamma);
  const double top = eig.values(0);
  int kappa = 0;
  while (kappa < eig.values.size() && eig.values(kappa) > tol * top) ++kappa;

  // Purification sum_mu sqrt(lambda_mu) z_mu (x) e_mu, reshaped so that the
  // rows carry (input, environment) and the columns carry the output index.
  Matrix psi(d_in * kappa, d_out);
  for (int j = 0; j < d_in; ++j) {
    for (int mu = 0; mu < kappa; ++mu) {
      const double s = std::sqrt(eig.values(mu));
      for (int m = 0; m < d_out; ++m) {
        psi(j * kappa + mu, m) = s * eig.vectors(j * d_out + m, mu);
      }
    }
  }
  ChoiMatrix out{d_in, kappa, psi * psi.adjoint()};
  // Renormalise away the weight of the dropped eigenvalues.
  out.gamma /= out.gamma.trace().real();
  return out;
}

KrausChannel conjugate_ancilla(const AncillaRep& rep) {
  if (rep.v.rows() != static_cast<Eigen::Index>(rep.d_out) * rep.env_dim ||
      rep.v.cols() != rep.d_in) {
    throw DimensionError("conjugate_ancilla: isometry has wrong shape");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(rep.d_out);
  for (int m = 0; m < rep.d_out; ++m) {
    kraus.push_back(rep.v.middleRows(m * rep.env_dim, rep.env_dim));
  }
  return KrausChannel(rep.d_in, rep.env_dim, std::move(kraus));
}

double isometry_residual(const KrausChannel& c1, const KrausChannel& c2,
                         const Matrix& w) {
  const int d = c1.d_in();
  double worst = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const Matrix e = matrix_unit(d, d, j, k);
      worst = std::max(worst,
                       max_abs(apply_channel(c1, e) - w * apply_channel(c2, e) * w.adjoint()));
    }
  }
  return worst;
}

KrausRelation find_relating_isometry(const KrausChannel& c1,
                                     const KrausChannel& c2, double tol) {
  if (c1.d_in() != c2.d_in()) {
    throw DimensionError("find_relating_isometry: input dimensions differ");
  }
  const int d = c1.d_in();
  const Matrix q1 = support_basis(apply_channel(c1, identity(d)));
  const Matrix q2 = support_basis(apply_channel(c2, identity(d)));
  if (q1.cols() != q2.cols()) {
    throw MismatchError(
        "find_relating_isometry: not conjugates of a common channel (output "
        "supports have ranks " +
        std::to_string(q1.cols()) + " and " + std::to_string(q2.cols()) + ")");
  }
  const Eigen::Index r = q1.cols();

  // Compressed outputs a1_x = q1^dagger c1(E_x) q1, likewise a2_x. A unitary
  // U with a1_x = U a2_x U^dagger solves a1_x U - U a2_x = 0. The
  // normal matrix of that linear system is accumulated in Kronecker form
  // for row-major vec(U).
  const Matrix id_r = identity(static_cast<int>(r));
  Matrix normal = Matrix::Zero(r * r, r * r);
  double weight = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const Matrix e = matrix_unit(d, d, j, k);
      const Matrix a = q1.adjoint() * apply_channel(c1, e) * q1;
      const Matrix b = q2.adjoint() * apply_channel(c2, e) * q2;
      weight += a.squaredNorm() + b.squaredNorm();
      normal += kron(a.adjoint() * a, id_r) +
                kron(id_r, (b * b.adjoint()).transpose()) -
                kron(a.adjoint(), b.transpose()) - kron(a, b.conjugate());
    }
  }
  const HermitianEigen eig = hermitian_eigen(normal);
  const double scale = std::max({eig.values(0), weight, 1e-300});
  Eigen::Index first_null = r * r;
  while (first_null > 0 && eig.values(first_null - 1) <= 1e-10 * scale) {
    --first_null;
  }
  const Matrix null_basis = eig.vectors.rightCols(r * r - first_null);
  if (null_basis.cols() == 0) {
    throw MismatchError(
        "find_relating_isometry: not conjugates of a common channel");
  }

  // Prefer the solution closest to the overlap of the two supports, so that
  // identical channels give W = I; mix in a fixed pseudo-random solution if
  // that projection is singular.
  const Vector ref = vec_row_major(q1.adjoint() * q2);
  Matrix t = unvec_row_major(null_basis * (null_basis.adjoint() * ref),
                             static_cast<int>(r), static_cast<int>(r));
  const RealVector sv = singular_values(t);
  if (sv.size() > 0 && !(sv(sv.size() - 1) > 1e-6 * std::max(sv(0), 1e-300))) {
    Rng rng(0x5eedULL);
    Vector coeff(null_basis.cols());
    for (Eigen::Index i = 0; i < coeff.size(); ++i) {
      coeff(i) = rng.complex_normal();
    }
    t += unvec_row_major(null_basis * coeff, static_cast<int>(r),
                         static_cast<int>(r));
  }

  KrausRelation rel;
  rel.w = q1 * polar_unitary(t) * q2.adjoint();
  rel.rank = static_cast<int>(r);
  rel.residual = std::max(isometry_residual(c1, c2, rel.w),
                          isometry_residual(c2, c1, rel.w.adjoint()));
  if (!(rel.residual < tol)) {
    throw MismatchError(
        "find_relating_isometry: not conjugates of a common channel "
        "(residual " +
        std::to_string(rel.residual) + ")");
  }
  return rel;
}

}  // namespace qcc
