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

// Dense complex linear-algebra kernels shared by every other module.
//
// All decompositions go through hermitian_eigen() and svd() so that the
// backend (currently Eigen) can be swapped in one place. Matrices are small
// (a few hundred rows at most) and everything is double precision.

#pragma once

#include <complex>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qcc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Default relative cutoff below which an eigen/singular value counts as zero.
inline constexpr double kZeroTol = 1e-10;

enum class Keep { A, B };
enum class LogBase { Two, E };

/// Eigenvalues sorted non-increasing, with the cutoff that produced them.
struct Spectrum {
  std::vector<double> values;
  double tolerance = kZeroTol;

  std::size_t size() const { return values.size(); }
};

/// Eigen-decomposition of a Hermitian matrix, eigenvalues non-increasing;
/// column i of `vectors` belongs to `values[i]`.
struct HermitianEigen {
  RealVector values;
  Matrix vectors;
};

struct Svd {
  Matrix u;
  RealVector singular_values;  // non-increasing
  Matrix v;
};

HermitianEigen hermitian_eigen(const Matrix& m);

/// Like hermitian_eigen, but with a basis that does not depend on the
/// backend: inside each eigenspace (eigenvalues within `degeneracy_tol`
/// relative to the largest magnitude) vectors are chosen by pivoting on the
/// eigenprojector's diagonal, lowest index first among ties, and each vector
/// is phased so its pivot entry is real positive.
HermitianEigen canonical_hermitian_eigen(const Matrix& m,
                                         double degeneracy_tol = 1e-9);
RealVector eigenvalues_hermitian(const Matrix& m);
Svd svd(const Matrix& m);
RealVector singular_values(const Matrix& m);

/// Largest |m_ij|.
double max_abs(const Matrix& m);
/// ||m - m^dagger||_max.
double hermiticity_defect(const Matrix& m);
/// Number of singular values above tol * sigma_max.
int numerical_rank(const Matrix& m, double tol = kZeroTol);

Matrix identity(int n);
Matrix projector(const Vector& psi);
Matrix matrix_unit(int rows, int cols, int i, int j);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(std::span<const Matrix> factors);
Matrix hadamard_product(const Matrix& a, const Matrix& b);

/// Partial trace of an operator on C^dA (x) C^dB, keeping factor `keep`.
Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Keep keep);

/// Schatten p-norm from singular values; p may be kInf.
double schatten_norm(const Matrix& m, double p);

/// Matrix power of a PSD Hermitian matrix (negative eigenvalues clipped to 0).
Matrix psd_power(const Matrix& m, double exponent);
/// Principal square root of a PSD Hermitian matrix.
Matrix psd_sqrt(const Matrix& m);

/// -sum lambda log lambda. Throws ValidationError when rho is not a state
/// within `tol` (negative eigenvalue below -tol, or |Tr rho - 1| > tol).
double von_neumann_entropy(const Matrix& rho, LogBase base = LogBase::Two,
                           double tol = 1e-8);
double shannon_entropy(std::span<const double> probabilities,
                       LogBase base = LogBase::Two);

/// Eigenvalues with |lambda| > tol * |lambda|_max, sorted non-increasing.
Spectrum nonzero_spectrum(const Matrix& m, double tol = kZeroTol);

/// Largest entrywise difference between two spectra, zero-padding the shorter.
double spectrum_deviation(const Spectrum& a, const Spectrum& b);

/// True iff a majorizes b. Vectors are zero-padded to equal length; throws
/// ValidationError when the sums differ by more than tol.
bool majorizes(std::span<const double> a, std::span<const double> b,
               double tol = 1e-9);

/// Row-major vectorisation: vec(M)[i * cols + j] = M(i, j).
Vector vec_row_major(const Matrix& m);
Matrix unvec_row_major(const Vector& v, int rows, int cols);

}  // namespace qcc
