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


// Generalised Pauli (Weyl-Heisenberg) operators X^j Z^k, Pauli-diagonal
// channels and the image of the completely noisy channel's conjugate.
//
// Indexing: in a single-qudit basis T_m = X^j Z^k with m = d*j + k, where
// X|e_k> = |e_{k+1}>, Z|e_k> = w^k |e_k>, w = exp(2 pi i / d), so that
// ZX = w XZ. In a product basis T_m = T1_{m1} (x) T2_{m2} with
// m = m1 * d2^2 + m2.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcc/channel.hpp"

namespace qcc {

/// A unitary operator basis closed under multiplication up to phases.
class PauliBasis {
 public:
  /// T_m T_n = phase * T_index.
  struct Product {
    int index = 0;
    Complex phase = 1.0;
  };

  int d = 0;
  /// Local dimensions; {d} for a single qudit.
  std::vector<int> factors;
  /// d^2 operators, T_0 = I.
  std::vector<Matrix> ops;

  int size() const { return static_cast<int>(ops.size()); }
  Product product(int m, int n) const;
  /// T_m^dagger T_n = phase * T_index.
  Product adjoint_product(int m, int n) const;
  /// T_m^dagger = phase * T_index.
  Product adjoint(int m) const;
  /// chi with T_m T_n T_m^dagger = chi * T_n.
  Complex commutation_phase(int m, int n) const;
  /// Exponents (j, k) of T_m = X^j Z^k in a single-qudit basis; for a
  /// product basis, the pair of factor indices (m1, m2).
  std::pair<int, int> label(int m) const;
  std::string name(int m) const;
  /// Subgroup generated by the given indices (phases ignored), sorted.
  std::vector<int> closure(const std::vector<int>& generators) const;

 private:
  friend PauliBasis build_basis(int d);
  friend PauliBasis product_basis(const PauliBasis& a, const PauliBasis& b);

  int split_ = 0;                // size of the second factor, 0 if single
  std::vector<Product> table_;  // product(m, n) at m * size + n
  std::vector<Product> adj_;
  std::vector<Complex> chi_;
};

PauliBasis build_basis(int d);
PauliBasis product_basis(const PauliBasis& a, const PauliBasis& b);
/// "pauli" or "pauli_product:[d1,d2]".
std::string basis_descriptor(const PauliBasis& basis);
PauliBasis basis_from_descriptor(const std::string& descriptor, int d);

/// Largest deviation of the stored product table from direct
/// multiplication, over all pairs.
double phase_table_defect(const PauliBasis& basis);

class PauliDiagonalChannel {
 public:
  /// Weights must be a probability vector (entries >= -1e-12, sum within
  /// 1e-10 of 1); tiny negatives are clipped to zero.
  PauliDiagonalChannel(PauliBasis basis, std::vector<double> weights);

  const PauliBasis& basis() const { return basis_; }
  const std::vector<double>& weights() const { return weights_; }
  /// Kraus operators sqrt(a_m) T_m for every m, zero weights included.
  const KrausChannel& channel() const { return channel_; }

 private:
  PauliBasis basis_;
  std::vector<double> weights_;
  KrausChannel channel_;
};

/// a_0 = b + (1 - b)/d^2, a_m = (1 - b)/d^2.
PauliDiagonalChannel depolarizing(const PauliBasis& basis, double b);
/// Weights a_{jk} = q_j / d for every k.
PauliDiagonalChannel qc_channel(const PauliBasis& basis,
                                const std::vector<double>& q);
/// Tensor product of two Pauli-diagonal channels in the product basis.
PauliDiagonalChannel product_channel(const PauliDiagonalChannel& a,
                                     const PauliDiagonalChannel& b);

/// lambda_n with Phi(T_n) = lambda_n T_n, lambda_n = sum_m a_m chi(m, n).
std::vector<Complex> lambda_spectrum(const PauliDiagonalChannel& channel);

struct NcImage {
  Matrix matrix;
  Matrix source_state;
};

/// gamma_mn = Tr[T_m rho T_n^dagger] / d^2 for any orthogonal operator basis
/// (Tr T_m^dagger T_n = d delta_mn).
NcImage noisy_conjugate_image(const std::vector<Matrix>& ops,
                              const Matrix& rho);
NcImage noisy_conjugate_image(const PauliBasis& basis, const Matrix& rho);

struct NcProperties {
  double projector_defect = 0.0;  // ||(d gamma)^2 - d gamma||_max
  int projector_rank = 0;
  double diagonal_defect = 0.0;   // max |gamma_mm - 1/d^2|
  double entry_excess = 0.0;      // max(0, |gamma_mn| - 1/d^2)
  double doubly_stochastic_defect = 0.0;

  bool holds(int d, double tol) const;
};

NcProperties nc_properties(const Matrix& gamma, int d);

/// (1/d^2) sum_l X^l R psi psi^dagger R X^-l (x) Z^l iota iota^dagger Z^-l,
/// with R reversing index order and iota the all-ones vector. Each d x d block
/// is circulant.
Matrix nc_image_cyclic_form(int d, const Vector& psi);
/// The cyclic form conjugated by D = diag(w^{-j k}) on index (j, k); equals
/// noisy_conjugate_image(build_basis(d), psi psi^dagger).
Matrix nc_image_explicit(int d, const Vector& psi);

/// U with rows vec(T_m)^T / sqrt(d), so that
/// N^{C,T}(rho) = U (I (x) rho) U^dagger / d. Verified on every sample;
/// throws ValidationError if the basis is not orthogonal or a residual
/// exceeds tol.
Matrix find_u_t(const std::vector<Matrix>& ops,
                const std::vector<Matrix>& samples, double tol = 1e-10);
/// Tr_1[U^dagger gamma U], the inverse of the relation above.
Matrix recover_state(const Matrix& u, const Matrix& gamma, int d);

/// v_m = Tr T_m^dagger rho, so rho = (1/d) sum_m v_m T_m.
std::vector<Complex> bloch_coefficients(const PauliBasis& basis,
                                        const Matrix& rho);

struct SubgroupReport {
  std::vector<int> generator_indices;
  std::vector<int> subgroup_indices;
  int order = 0;
  std::vector<std::vector<int>> cosets;
};

/// Subgroup generated by {T_m : |v_m| > tol}.
SubgroupReport subgroup_of_support(const PauliBasis& basis, const Matrix& rho,
                                   double tol = 1e-10);
/// Cosets of a subgroup, each sorted, ordered by least element.
std::vector<std::vector<int>> cosets_of(const PauliBasis& basis,
                                        const std::vector<int>& subgroup);

struct Decomposition {
  bool decomposable = false;
  std::vector<std::vector<int>> blocks;
  std::vector<int> permutation;
};

/// Connected components of the graph with edges where
/// |M_ij| > tol * max|M|.
Decomposition is_decomposable(const Matrix& m, double tol = 1e-10);

/// The d eigenvectors of W = T_{w_index}; state n has eigenvalue w^n after W
/// is rescaled so that W^d = I. Requires j or k coprime to d.
std::vector<Vector> axis_states(const PauliBasis& basis, int w_index);
/// (1/d) sum_j w^{-n j} W^j for the rescaled W.
Matrix axis_projector(const PauliBasis& basis, int w_index, int n);

struct Axis {
  int generator = 0;
  double t = 0.0;
};

/// Weights a_0 = s + sum t_L / d + u / d^2, a_m = t_L / d + u / d^2 on the
/// non-identity elements of axis L, u / d^2 elsewhere. Axes must be
/// disjoint cyclic subgroups of order d.
PauliDiagonalChannel axes_channel(const PauliBasis& basis, double s,
                                  const std::vector<Axis>& axes, double u);
/// max over L of |s + t_L|, and |s| if some element lies on no axis.
double axes_lambda(const PauliBasis& basis, double s,
                   const std::vector<Axis>& axes);

struct Nu2Bound {
  double bound = 0.0;
  int argmax = 0;  // index n != 0 of the largest |lambda_n|
  std::optional<Vector> witness_state;
  double witness_value = 0.0;  // ||Phi(witness)||_2
};

/// d^{-1/2} (1 + (d - 1) max_{n != 0} |lambda_n|^2)^{1/2}, with the best axis
/// state of T_argmax as witness when T_argmax generates an axis.
Nu2Bound nu2_bound(const PauliDiagonalChannel& channel);

struct MajorizationBound {
  double bound = 0.0;
  std::vector<double> beta;
  /// Sorted weights in blocks of d (basis indices).
  std::vector<std::vector<int>> partition;
  /// Some block boundary separates weights equal within 1e-12.
  bool ambiguous_partition = false;
  /// A subgroup whose cosets realise the sorted blocks, if one exists.
  std::optional<std::vector<int>> attaining_subgroup;
};

MajorizationBound majorization_bound(const PauliDiagonalChannel& channel,
                                     double p);

struct InfinityCheck {
  bool subgroup_ok = false;
  bool inequality_ok = false;
  bool certified = false;
  std::string conclusion;
};

/// Sufficient condition for nu_inf(Phi^{(x) r}) = nu_inf(Phi)^r:
/// the sorted blocks are cosets of a subgroup and b_{d-1}^r > b_0^{r-1} b_d.
InfinityCheck p_infty_multiplicativity_check(
    const PauliDiagonalChannel& channel, int r);

enum class StateClass { Product, MaximallyEntangled, Other };
std::string to_string(StateClass c);

struct ProductOrMe {
  bool d2_decomposable = false;
  StateClass state_class = StateClass::Other;
  std::vector<double> schmidt;
};

/// For a product basis of two d-dimensional factors (d prime) and psi in
/// C^d (x) C^d.
ProductOrMe classify_product_or_me(const PauliBasis& basis, const Vector& psi);

}  // namespace qcc
