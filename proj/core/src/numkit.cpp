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

#include "qcc/numkit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "qcc/error.hpp"

namespace qcc {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

double log_in(double x, LogBase base) {
  return base == LogBase::Two ? std::log2(x) : std::log(x);
}

}  // namespace

HermitianEigen hermitian_eigen(const Matrix& m) {
  require_square(m, "hermitian_eigen");
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigen: eigen-solver did not converge");
  }
  // Eigen returns ascending order.
  HermitianEigen out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

HermitianEigen canonical_hermitian_eigen(const Matrix& m,
                                         double degeneracy_tol) {
  HermitianEigen eig = hermitian_eigen(m);
  const Eigen::Index n = eig.values.size();
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(eig.values(i)));
  }
  const double gap = degeneracy_tol * std::max(scale, 1e-300);

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && eig.values(stop - 1) - eig.values(stop) <= gap) ++stop;
    const Eigen::Index width = stop - start;
    // Projector onto the not-yet-covered part of the eigenspace.
    Matrix remaining =
        eig.vectors.middleCols(start, width) *
        eig.vectors.middleCols(start, width).adjoint();
    for (Eigen::Index c = 0; c < width; ++c) {
      double best = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        best = std::max(best, remaining(i, i).real());
      }
      Eigen::Index pivot = 0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (remaining(i, i).real() >= best - 1e-9) {
          pivot = i;
          break;
        }
      }
      Vector v = remaining.col(pivot);
      v /= v.norm();
      eig.vectors.col(start + c) = v;
      remaining -= v * v.adjoint();
    }
    // Eigenvalues inside one cluster are replaced by their mean so that the
    // ordering is stable too.
    const double mean = eig.values.segment(start, width).mean();
    if (width > 1) eig.values.segment(start, width).setConstant(mean);
    start = stop;
  }
  return eig;
}

RealVector eigenvalues_hermitian(const Matrix& m) {
  require_square(m, "eigenvalues_hermitian");
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("eigenvalues_hermitian: eigen-solver did not converge");
  }
  return solver.eigenvalues().reverse();
}

Svd svd(const Matrix& m) {
  Eigen::BDCSVD<Matrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return Svd{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

RealVector singular_values(const Matrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::BDCSVD<Matrix> solver(m);
  return solver.singularValues();
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
  require_square(m, "hermiticity_defect");
  return max_abs(m - m.adjoint());
}

int numerical_rank(const Matrix& m, double tol) {
  const RealVector s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++rank;
  }
  return rank;
}

Matrix identity(int n) { return Matrix::Identity(n, n); }

Matrix projector(const Vector& psi) { return psi * psi.adjoint(); }

Matrix matrix_unit(int rows, int cols, int i, int j) {
  Matrix e = Matrix::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron_all(std::span<const Matrix> factors) {
  Matrix out = Matrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

Matrix hadamard_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hadamard_product: shape mismatch");
  }
  return a.cwiseProduct(b);
}

Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Keep keep) {
  if (dim_a <= 0 || dim_b <= 0 || m.rows() != dim_a * dim_b ||
      m.cols() != dim_a * dim_b) {
    throw DimensionError("partial_trace: matrix is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", dims (" +
                         std::to_string(dim_a) + "," + std::to_string(dim_b) +
                         ")");
  }
  if (keep == Keep::A) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a) {
      for (int ap = 0; ap < dim_a; ++ap) {
        Complex s = 0.0;
        for (int b = 0; b < dim_b; ++b) s += m(a * dim_b + b, ap * dim_b + b);
        out(a, ap) = s;
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
  }
  return out;
}

double schatten_norm(const Matrix& m, double p) {
  if (!(p >= 1.0)) {
    throw ValidationError("schatten_norm: p must be >= 1, got " +
                          std::to_string(p));
  }
  require_square(m, "schatten_norm");
  const RealVector s = singular_values(m);
  if (s.size() == 0) return 0.0;
  const double top = s(0);
  if (top == 0.0) return 0.0;
  if (std::isinf(p)) return top;
  // Scale by the largest value so large p cannot overflow.
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

Matrix psd_power(const Matrix& m, double exponent) {
  const HermitianEigen eig = hermitian_eigen(m);
  RealVector lam = eig.values;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    lam(i) = lam(i) > 0.0 ? std::pow(lam(i), exponent) : 0.0;
  }
  return eig.vectors * lam.asDiagonal() * eig.vectors.adjoint();
}

Matrix psd_sqrt(const Matrix& m) { return psd_power(m, 0.5); }

double shannon_entropy(std::span<const double> probabilities, LogBase base) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * log_in(p, base);
  }
  return s;
}

double von_neumann_entropy(const Matrix& rho, LogBase base, double tol) {
  require_square(rho, "von_neumann_entropy");
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    throw ValidationError("von_neumann_entropy: trace is " +
                          std::to_string(trace));
  }
  const RealVector lam = eigenvalues_hermitian(rho);
  if (lam.size() > 0 && lam(lam.size() - 1) < -tol) {
    throw ValidationError("von_neumann_entropy: negative eigenvalue " +
                          std::to_string(lam(lam.size() - 1)));
  }
  std::vector<double> p(lam.data(), lam.data() + lam.size());
  return shannon_entropy(p, base);
}

Spectrum nonzero_spectrum(const Matrix& m, double tol) {
  require_square(m, "nonzero_spectrum");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_defect(m) > 1e-8 * scale) {
    throw ValidationError("nonzero_spectrum: matrix is not Hermitian");
  }
  const RealVector lam = eigenvalues_hermitian(m);
  double largest = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    largest = std::max(largest, std::abs(lam(i)));
  }
  Spectrum out;
  out.tolerance = tol;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (std::abs(lam(i)) > tol * largest) out.values.push_back(lam(i));
  }
  return out;
}

double spectrum_deviation(const Spectrum& a, const Spectrum& b) {
  const std::size_t n = std::max(a.size(), b.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a.values[i] : 0.0;
    const double y = i < b.size() ? b.values[i] : 0.0;
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

bool majorizes(std::span<const double> a, std::span<const double> b,
               double tol) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  if (std::abs(sx - sy) > tol) {
    throw ValidationError("majorizes: sums differ (" + std::to_string(sx) +
                          " vs " + std::to_string(sy) + ")");
  }
  double px = 0.0;
  double py = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    px += x[i];
    py += y[i];
    if (px < py - tol) return false;
  }
  return true;
}

Vector vec_row_major(const Matrix& m) {
  Vector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  }
  return v;
}

Matrix unvec_row_major(const Vector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw DimensionError("unvec_row_major: size mismatch");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  }
  return m;
}

}  // namespace qcc
