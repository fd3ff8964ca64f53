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


#include "qcc/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "qcc/error.hpp"

namespace qcc {

namespace {

Complex root_of_unity(int d, long long power) {
  const long long r = ((power % d) + d) % d;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / d);
}

int mod(int a, int d) { return ((a % d) + d) % d; }

Matrix shift_x(int d) {
  Matrix x = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

Matrix phase_z(int d) {
  Matrix z = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = root_of_unity(d, k);
  return z;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::string power_name(const char* base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return std::string(base) + std::to_string(e);
}

}  // namespace

PauliBasis::Product PauliBasis::product(int m, int n) const {
  return table_[static_cast<std::size_t>(m) * size() + n];
}

PauliBasis::Product PauliBasis::adjoint(int m) const { return adj_[m]; }

PauliBasis::Product PauliBasis::adjoint_product(int m, int n) const {
  const Product a = adj_[m];
  const Product p = product(a.index, n);
  return Product{p.index, a.phase * p.phase};
}

Complex PauliBasis::commutation_phase(int m, int n) const {
  return chi_[static_cast<std::size_t>(m) * size() + n];
}

std::pair<int, int> PauliBasis::label(int m) const {
  if (split_ == 0) return {m / d, m % d};
  return {m / split_, m % split_};
}

std::string PauliBasis::name(int m) const {
  if (split_ == 0) {
    const auto [j, k] = label(m);
    const std::string s = power_name("X", j) + power_name("Z", k);
    return s.empty() ? "I" : s;
  }
  // Names of the factors are rebuilt from their local dimensions.
  const auto [m1, m2] = label(m);
  const int d2 = factors.back();
  const int d1 = d / d2;
  auto local = [](int dd, int idx) {
    const std::string s =
        power_name("X", idx / dd) + power_name("Z", idx % dd);
    return s.empty() ? std::string("I") : s;
  };
  if (factors.size() == 2) return local(d1, m1) + "⊗" + local(d2, m2);
  return std::to_string(m1) + "⊗" + std::to_string(m2);
}

std::vector<int> PauliBasis::closure(const std::vector<int>& generators) const {
  std::vector<char> in(size(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int g : generators) {
      const int next = product(members[i], g).index;
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

PauliBasis build_basis(int d) {
  if (d < 2) throw DimensionError("build_basis: d must be >= 2");
  PauliBasis basis;
  basis.d = d;
  basis.factors = {d};
  const Matrix x = shift_x(d);
  const Matrix z = phase_z(d);
  std::vector<Matrix> xp{identity(d)};
  std::vector<Matrix> zp{identity(d)};
  for (int i = 1; i < d; ++i) {
    xp.push_back(x * xp.back());
    zp.push_back(z * zp.back());
  }
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) basis.ops.push_back(xp[j] * zp[k]);
  }
  const int n = d * d;
  basis.table_.resize(static_cast<std::size_t>(n) * n);
  basis.chi_.resize(static_cast<std::size_t>(n) * n);
  basis.adj_.resize(n);
  for (int m = 0; m < n; ++m) {
    const int a = m / d;
    const int b = m % d;
    // (X^a Z^b)^dagger = w^{ab} X^{-a} Z^{-b}
    basis.adj_[m] = {mod(-a, d) * d + mod(-b, d),
                     root_of_unity(d, static_cast<long long>(a) * b)};
    for (int q = 0; q < n; ++q) {
      const int c = q / d;
      const int e = q % d;
      // Z^b X^c = w^{bc} X^c Z^b
      basis.table_[static_cast<std::size_t>(m) * n + q] = {
          mod(a + c, d) * d + mod(b + e, d),
          root_of_unity(d, static_cast<long long>(b) * c)};
      basis.chi_[static_cast<std::size_t>(m) * n + q] =
          root_of_unity(d, static_cast<long long>(b) * c -
                               static_cast<long long>(a) * e);
    }
  }
  return basis;
}

PauliBasis product_basis(const PauliBasis& a, const PauliBasis& b) {
  PauliBasis basis;
  basis.d = a.d * b.d;
  basis.factors = a.factors;
  basis.factors.insert(basis.factors.end(), b.factors.begin(), b.factors.end());
  basis.split_ = b.size();
  const int na = a.size();
  const int nb = b.size();
  const int n = na * nb;
  for (int m1 = 0; m1 < na; ++m1) {
    for (int m2 = 0; m2 < nb; ++m2) {
      basis.ops.push_back(kron(a.ops[m1], b.ops[m2]));
    }
  }
  basis.table_.resize(static_cast<std::size_t>(n) * n);
  basis.chi_.resize(static_cast<std::size_t>(n) * n);
  basis.adj_.resize(n);
  for (int m = 0; m < n; ++m) {
    const int m1 = m / nb;
    const int m2 = m % nb;
    const auto a1 = a.adjoint(m1);
    const auto a2 = b.adjoint(m2);
    basis.adj_[m] = {a1.index * nb + a2.index, a1.phase * a2.phase};
    for (int q = 0; q < n; ++q) {
      const int q1 = q / nb;
      const int q2 = q % nb;
      const auto p1 = a.product(m1, q1);
      const auto p2 = b.product(m2, q2);
      basis.table_[static_cast<std::size_t>(m) * n + q] = {
          p1.index * nb + p2.index, p1.phase * p2.phase};
      basis.chi_[static_cast<std::size_t>(m) * n + q] =
          a.commutation_phase(m1, q1) * b.commutation_phase(m2, q2);
    }
  }
  return basis;
}

std::string basis_descriptor(const PauliBasis& basis) {
  if (basis.factors.size() == 1) return "pauli";
  std::string s = "pauli_product:[";
  for (std::size_t i = 0; i < basis.factors.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(basis.factors[i]);
  }
  return s + "]";
}

PauliBasis basis_from_descriptor(const std::string& descriptor, int d) {
  if (descriptor == "pauli") return build_basis(d);
  const std::string prefix = "pauli_product:[";
  if (descriptor.rfind(prefix, 0) != 0 || descriptor.back() != ']') {
    throw ValidationError("unknown basis descriptor '" + descriptor + "'");
  }
  std::vector<int> dims;
  std::string body = descriptor.substr(prefix.size(),
                                       descriptor.size() - prefix.size() - 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string item =
        body.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad basis descriptor '" + descriptor + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (dims.size() < 2) {
    throw ValidationError("product basis needs at least two factors");
  }
  PauliBasis basis = build_basis(dims[0]);
  for (std::size_t i = 1; i < dims.size(); ++i) {
    basis = product_basis(basis, build_basis(dims[i]));
  }
  if (basis.d != d) {
    throw DimensionError("basis descriptor '" + descriptor +
                         "' does not match d = " + std::to_string(d));
  }
  return basis;
}

double phase_table_defect(const PauliBasis& basis) {
  double worst = 0.0;
  for (int m = 0; m < basis.size(); ++m) {
    for (int n = 0; n < basis.size(); ++n) {
      const auto p = basis.product(m, n);
      worst = std::max(worst, max_abs(basis.ops[m] * basis.ops[n] -
                                      p.phase * basis.ops[p.index]));
      const auto q = basis.adjoint_product(m, n);
      worst = std::max(worst, max_abs(basis.ops[m].adjoint() * basis.ops[n] -
                                      q.phase * basis.ops[q.index]));
      const Complex chi = basis.commutation_phase(m, n);
      worst = std::max(
          worst, max_abs(basis.ops[m] * basis.ops[n] * basis.ops[m].adjoint() -
                         chi * basis.ops[n]));
    }
  }
  return worst;
}

namespace {

std::vector<double> checked_weights(const PauliBasis& basis,
                                    std::vector<double> weights) {
  if (static_cast<int>(weights.size()) != basis.size()) {
    throw DimensionError("Pauli channel needs " + std::to_string(basis.size()) +
                         " weights, got " + std::to_string(weights.size()));
  }
  double sum = 0.0;
  for (double& w : weights) {
    if (!std::isfinite(w) || w < -1e-12) {
      throw ValidationError("Pauli weights must be non-negative, got " +
                            std::to_string(w));
    }
    w = std::max(w, 0.0);
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw ValidationError("Pauli weights sum to " + std::to_string(sum));
  }
  return weights;
}

KrausChannel pauli_kraus(const PauliBasis& basis,
                         const std::vector<double>& weights) {
  std::vector<Matrix> kraus;
  kraus.reserve(weights.size());
  for (std::size_t m = 0; m < weights.size(); ++m) {
    kraus.push_back(std::sqrt(weights[m]) * basis.ops[m]);
  }
  return KrausChannel(basis.d, basis.d, std::move(kraus));
}

}  // namespace

PauliDiagonalChannel::PauliDiagonalChannel(PauliBasis basis,
                                           std::vector<double> weights)
    : basis_(std::move(basis)),
      weights_(checked_weights(basis_, std::move(weights))),
      channel_(pauli_kraus(basis_, weights_)) {}

PauliDiagonalChannel depolarizing(const PauliBasis& basis, double b) {
  const double dd = static_cast<double>(basis.size());
  std::vector<double> w(basis.size(), (1.0 - b) / dd);
  w[0] = b + (1.0 - b) / dd;
  return PauliDiagonalChannel(basis, std::move(w));
}

PauliDiagonalChannel qc_channel(const PauliBasis& basis,
                                const std::vector<double>& q) {
  const int d = basis.d;
  if (static_cast<int>(q.size()) != d) {
    throw DimensionError("qc_channel: need d probabilities");
  }
  std::vector<double> w(basis.size());
  for (int m = 0; m < basis.size(); ++m) w[m] = q[m / d] / d;
  return PauliDiagonalChannel(basis, std::move(w));
}

PauliDiagonalChannel product_channel(const PauliDiagonalChannel& a,
                                     const PauliDiagonalChannel& b) {
  PauliBasis basis = product_basis(a.basis(), b.basis());
  std::vector<double> w;
  w.reserve(basis.size());
  for (double x : a.weights()) {
    for (double y : b.weights()) w.push_back(x * y);
  }
  return PauliDiagonalChannel(std::move(basis), std::move(w));
}

std::vector<Complex> lambda_spectrum(const PauliDiagonalChannel& channel) {
  const PauliBasis& basis = channel.basis();
  std::vector<Complex> lambda(basis.size(), 0.0);
  for (int n = 0; n < basis.size(); ++n) {
    for (int m = 0; m < basis.size(); ++m) {
      lambda[n] += channel.weights()[m] * basis.commutation_phase(m, n);
    }
  }
  return lambda;
}

NcImage noisy_conjugate_image(const std::vector<Matrix>& ops,
                              const Matrix& rho) {
  if (ops.empty()) throw DimensionError("noisy_conjugate_image: empty basis");
  const Eigen::Index d = ops[0].rows();
  if (rho.rows() != d || rho.cols() != d) {
    throw DimensionError("noisy_conjugate_image: state has wrong dimension");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-8) {
    throw ValidationError("noisy_conjugate_image: state must have unit trace");
  }
  const auto n = static_cast<Eigen::Index>(ops.size());
  NcImage out;
  out.source_state = rho;
  out.matrix.resize(n, n);
  std::vector<Matrix> left(n);
  for (Eigen::Index m = 0; m < n; ++m) left[m] = ops[m] * rho;
  const double scale = 1.0 / static_cast<double>(d * d);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index q = 0; q < n; ++q) {
      // Tr[A B^dagger] = sum_ij A_ij conj(B_ij)
      out.matrix(m, q) = scale * (left[m].cwiseProduct(ops[q].conjugate())).sum();
    }
  }
  return out;
}

NcImage noisy_conjugate_image(const PauliBasis& basis, const Matrix& rho) {
  return noisy_conjugate_image(basis.ops, rho);
}

bool NcProperties::holds(int d, double tol) const {
  return projector_defect < tol && projector_rank == d &&
         diagonal_defect < tol && entry_excess < tol &&
         doubly_stochastic_defect < tol;
}

NcProperties nc_properties(const Matrix& gamma, int d) {
  NcProperties out;
  const Matrix p = static_cast<double>(d) * gamma;
  out.projector_defect = max_abs(p * p - p);
  out.projector_rank = numerical_rank(p, 1e-8);
  const double inv = 1.0 / (static_cast<double>(d) * d);
  const double d3 = static_cast<double>(d) * d * d;
  Matrix ds(gamma.rows(), gamma.cols());
  for (Eigen::Index i = 0; i < gamma.rows(); ++i) {
    out.diagonal_defect =
        std::max(out.diagonal_defect, std::abs(gamma(i, i) - inv));
    for (Eigen::Index j = 0; j < gamma.cols(); ++j) {
      out.entry_excess = std::max(out.entry_excess, std::abs(gamma(i, j)) - inv);
      ds(i, j) = d3 * std::norm(gamma(i, j));
    }
  }
  const Eigen::VectorXd rows = ds.real().rowwise().sum();
  const Eigen::VectorXd cols = ds.real().colwise().sum().transpose();
  out.doubly_stochastic_defect =
      std::max((rows.array() - 1.0).abs().maxCoeff(),
               (cols.array() - 1.0).abs().maxCoeff());
  return out;
}

Matrix nc_image_cyclic_form(int d, const Vector& psi) {
  if (psi.size() != d) {
    throw DimensionError("nc_image_cyclic_form: state has wrong dimension");
  }
  Vector reversed(d);
  for (int k = 0; k < d; ++k) reversed(k) = psi(mod(d - k, d));
  const Matrix x = shift_x(d);
  const Matrix z = phase_z(d);
  Vector a = reversed;
  Vector b = Vector::Ones(d);
  Matrix out = Matrix::Zero(d * d, d * d);
  for (int l = 0; l < d; ++l) {
    out += kron(projector(a), projector(b));
    a = x * a;
    b = z * b;
  }
  return out / static_cast<double>(d * d);
}

Matrix nc_image_explicit(int d, const Vector& psi) {
  const Matrix cyclic = nc_image_cyclic_form(d, psi);
  Vector diag(d * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      diag(j * d + k) = root_of_unity(d, -static_cast<long long>(j) * k);
    }
  }
  return diag.asDiagonal() * cyclic * diag.conjugate().asDiagonal();
}

Matrix find_u_t(const std::vector<Matrix>& ops,
                const std::vector<Matrix>& samples, double tol) {
  if (ops.empty()) throw DimensionError("find_u_t: empty basis");
  const int d = static_cast<int>(ops[0].rows());
  if (static_cast<int>(ops.size()) != d * d) {
    throw DimensionError("find_u_t: basis must have d^2 elements");
  }
  const double rd = std::sqrt(static_cast<double>(d));
  Matrix u(d * d, d * d);
  for (int m = 0; m < d * d; ++m) {
    if (ops[m].rows() != d || ops[m].cols() != d) {
      throw DimensionError("find_u_t: operators must be d x d");
    }
    u.row(m) = vec_row_major(ops[m]).transpose() / rd;
  }
  const double unitarity = max_abs(u * u.adjoint() - identity(d * d));
  if (unitarity > tol) {
    throw ValidationError(
        "find_u_t: basis is not orthogonal (Tr T_m^dagger T_n != d delta)");
  }
  for (const auto& rho : samples) {
    const Matrix predicted =
        u * kron(identity(d), rho) * u.adjoint() / static_cast<double>(d);
    const double residual =
        max_abs(noisy_conjugate_image(ops, rho).matrix - predicted);
    if (residual > tol) {
      throw ValidationError("find_u_t: residual " + std::to_string(residual) +
                            " on a sample");
    }
  }
  return u;
}

Matrix recover_state(const Matrix& u, const Matrix& gamma, int d) {
  return partial_trace(u.adjoint() * gamma * u, d, d, Keep::B);
}

std::vector<Complex> bloch_coefficients(const PauliBasis& basis,
                                        const Matrix& rho) {
  if (rho.rows() != basis.d || rho.cols() != basis.d) {
    throw DimensionError("bloch_coefficients: state has wrong dimension");
  }
  std::vector<Complex> v(basis.size());
  for (int m = 0; m < basis.size(); ++m) {
    v[m] = (basis.ops[m].adjoint() * rho).trace();
  }
  return v;
}

std::vector<std::vector<int>> cosets_of(const PauliBasis& basis,
                                        const std::vector<int>& subgroup) {
  std::vector<int> owner(basis.size(), -1);
  std::vector<std::vector<int>> cosets;
  for (int k = 0; k < basis.size(); ++k) {
    if (owner[k] >= 0) continue;
    std::vector<int> coset;
    for (int s : subgroup) coset.push_back(basis.product(k, s).index);
    std::sort(coset.begin(), coset.end());
    for (int c : coset) owner[c] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

SubgroupReport subgroup_of_support(const PauliBasis& basis, const Matrix& rho,
                                   double tol) {
  const std::vector<Complex> v = bloch_coefficients(basis, rho);
  SubgroupReport out;
  for (int m = 0; m < basis.size(); ++m) {
    if (std::abs(v[m]) > tol) out.generator_indices.push_back(m);
  }
  out.subgroup_indices = basis.closure(out.generator_indices);
  out.order = static_cast<int>(out.subgroup_indices.size());
  out.cosets = cosets_of(basis, out.subgroup_indices);
  return out;
}

Decomposition is_decomposable(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("is_decomposable: matrix must be square");
  }
  const auto n = static_cast<int>(m.rows());
  const double cut = tol * max_abs(m);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && std::abs(m(i, j)) > cut) {
        const int a = find(i);
        const int b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  Decomposition out;
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[block_of[root]].push_back(i);
  }
  for (const auto& b : out.blocks) {
    out.permutation.insert(out.permutation.end(), b.begin(), b.end());
  }
  out.decomposable = out.blocks.size() > 1;
  return out;
}

namespace {

// T_w rescaled so that its d-th power is the identity.
Matrix normalised_generator(const PauliBasis& basis, int w_index) {
  if (w_index <= 0 || w_index >= basis.size()) {
    throw ValidationError("axis generator must be a non-identity element");
  }
  const int d = basis.d;
  const Matrix& w = basis.ops[w_index];
  Matrix power = identity(d);
  for (int i = 0; i < d; ++i) power = power * w;
  const Complex c = power(0, 0);
  if (max_abs(power - c * identity(d)) > 1e-10) {
    throw ValidationError("axis generator does not satisfy W^d ~ I");
  }
  return w * std::polar(1.0, -std::arg(c) / d);
}

}  // namespace

Matrix axis_projector(const PauliBasis& basis, int w_index, int n) {
  const int d = basis.d;
  const Matrix w = normalised_generator(basis, w_index);
  Matrix acc = Matrix::Zero(d, d);
  Matrix power = identity(d);
  for (int j = 0; j < d; ++j) {
    acc += root_of_unity(d, -static_cast<long long>(n) * j) * power;
    power = power * w;
  }
  return acc / static_cast<double>(d);
}

std::vector<Vector> axis_states(const PauliBasis& basis, int w_index) {
  const int d = basis.d;
  std::vector<Vector> states;
  for (int n = 0; n < d; ++n) {
    const Matrix p = axis_projector(basis, w_index, n);
    if (std::abs(p.trace() - Complex(1.0)) > 1e-8) {
      throw ValidationError(
          "axis_states: generator " + basis.name(w_index) +
          " does not have d distinct eigenvalues (need j or k coprime to d)");
    }
    Eigen::Index pivot = 0;
    p.diagonal().real().maxCoeff(&pivot);
    Vector v = p.col(pivot);
    states.push_back(v / v.norm());
  }
  return states;
}

namespace {

// Non-identity elements W, W^2, ..., W^{d-1} of an axis.
std::vector<int> axis_elements(const PauliBasis& basis, int generator) {
  std::vector<int> out;
  int cur = generator;
  while (cur != 0 && static_cast<int>(out.size()) < basis.size()) {
    out.push_back(cur);
    cur = basis.product(cur, generator).index;
  }
  if (static_cast<int>(out.size()) + 1 != basis.d) {
    throw ValidationError("axis generated by " + basis.name(generator) +
                          " does not have order d");
  }
  return out;
}

}  // namespace

PauliDiagonalChannel axes_channel(const PauliBasis& basis, double s,
                                  const std::vector<Axis>& axes, double u) {
  const int d = basis.d;
  double total = s + u;
  for (const auto& a : axes) total += a.t;
  if (std::abs(total - 1.0) > 1e-10) {
    throw ValidationError("axes_channel: s + sum t + u must equal 1, got " +
                          std::to_string(total));
  }
  const double dd = static_cast<double>(d);
  std::vector<double> w(basis.size(), u / (dd * dd));
  std::vector<char> used(basis.size(), 0);
  w[0] = s + u / (dd * dd);
  for (const auto& a : axes) {
    w[0] += a.t / dd;
    for (int m : axis_elements(basis, a.generator)) {
      if (used[m]) {
        throw ValidationError("axes_channel: axes overlap at " +
                              basis.name(m));
      }
      used[m] = 1;
      w[m] += a.t / dd;
    }
  }
  for (double x : w) {
    if (x < -1e-12) {
      throw ValidationError(
          "axes_channel: parameters violate complete positivity (negative "
          "weight " +
          std::to_string(x) + ")");
    }
  }
  return PauliDiagonalChannel(basis, std::move(w));
}

double axes_lambda(const PauliBasis& basis, double s,
                   const std::vector<Axis>& axes) {
  std::vector<char> used(basis.size(), 0);
  double lambda = 0.0;
  for (const auto& a : axes) {
    lambda = std::max(lambda, std::abs(s + a.t));
    for (int m : axis_elements(basis, a.generator)) used[m] = 1;
  }
  for (int m = 1; m < basis.size(); ++m) {
    if (!used[m]) lambda = std::max(lambda, std::abs(s));
  }
  return lambda;
}

Nu2Bound nu2_bound(const PauliDiagonalChannel& channel) {
  const PauliBasis& basis = channel.basis();
  const std::vector<Complex> lambda = lambda_spectrum(channel);
  Nu2Bound out;
  double top = -1.0;
  for (int n = 1; n < basis.size(); ++n) {
    if (std::abs(lambda[n]) > top + 1e-14) {
      top = std::abs(lambda[n]);
      out.argmax = n;
    }
  }
  const double d = basis.d;
  out.bound = std::sqrt((1.0 + (d - 1.0) * top * top) / d);
  try {
    for (const auto& psi : axis_states(basis, out.argmax)) {
      const double value =
          schatten_norm(apply_channel(channel.channel(), projector(psi)), 2.0);
      if (!out.witness_state || value > out.witness_value) {
        out.witness_state = psi;
        out.witness_value = value;
      }
    }
  } catch (const ValidationError&) {
    out.witness_state.reset();
  }
  return out;
}

namespace {

// All subgroups of the given order, found by growing generating sets.
std::vector<std::vector<int>> subgroups_of_order(const PauliBasis& basis,
                                                 int order) {
  std::set<std::vector<int>> seen;
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier{{0}};
  seen.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& group : frontier) {
      for (int g = 1; g < basis.size(); ++g) {
        if (std::binary_search(group.begin(), group.end(), g)) continue;
        std::vector<int> gens = group;
        gens.push_back(g);
        std::vector<int> bigger = basis.closure(gens);
        const int size = static_cast<int>(bigger.size());
        if (size > order || order % size != 0) continue;
        if (!seen.insert(bigger).second) continue;
        if (size == order) {
          found.insert(bigger);
        } else {
          next.push_back(std::move(bigger));
        }
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

MajorizationBound majorization_bound(const PauliDiagonalChannel& channel,
                                     double p) {
  if (!(p >= 1.0)) {
    throw ValidationError("majorization_bound: p must be >= 1");
  }
  const PauliBasis& basis = channel.basis();
  const std::vector<double>& a = channel.weights();
  const int d = basis.d;
  const int n = basis.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[x] > a[y]; });
  std::vector<double> b(n);
  for (int i = 0; i < n; ++i) b[i] = a[order[i]];

  MajorizationBound out;
  out.beta.assign(d, 0.0);
  out.partition.assign(d, {});
  for (int i = 0; i < n; ++i) {
    out.beta[i / d] += b[i];
    out.partition[i / d].push_back(order[i]);
  }
  for (auto& block : out.partition) std::sort(block.begin(), block.end());
  for (int j = 1; j < d; ++j) {
    if (b[j * d - 1] - b[j * d] <= 1e-12) out.ambiguous_partition = true;
  }
  if (std::isinf(p)) {
    out.bound = out.beta[0];
  } else {
    double acc = 0.0;
    for (double x : out.beta) acc += std::pow(x, p);
    out.bound = std::pow(acc, 1.0 / p);
  }

  for (const auto& group : subgroups_of_order(basis, d)) {
    std::vector<std::vector<double>> coset_weights;
    for (const auto& coset : cosets_of(basis, group)) {
      std::vector<double> w;
      for (int m : coset) w.push_back(a[m]);
      coset_weights.push_back(sorted_desc(std::move(w)));
    }
    std::sort(coset_weights.begin(), coset_weights.end(),
              std::greater<>());
    bool match = true;
    for (int j = 0; j < d && match; ++j) {
      for (int k = 0; k < d; ++k) {
        if (std::abs(coset_weights[j][k] - b[j * d + k]) > 1e-12) {
          match = false;
          break;
        }
      }
    }
    if (match) {
      out.attaining_subgroup = group;
      break;
    }
  }
  return out;
}

InfinityCheck p_infty_multiplicativity_check(
    const PauliDiagonalChannel& channel, int r) {
  if (r < 1) throw ValidationError("p_infty check: r must be >= 1");
  const MajorizationBound mb = majorization_bound(channel, kInf);
  const int d = channel.basis().d;
  const std::vector<double> b = sorted_desc(channel.weights());
  InfinityCheck out;
  out.subgroup_ok = mb.attaining_subgroup.has_value();
  out.inequality_ok =
      std::pow(b[d - 1], r) > std::pow(b[0], r - 1) * b[d];
  out.certified = out.subgroup_ok && out.inequality_ok;
  if (out.certified) {
    out.conclusion = "certified: nu_inf(Phi^(x)" + std::to_string(r) +
                     ") = nu_inf(Phi)^" + std::to_string(r);
  } else if (!out.subgroup_ok) {
    out.conclusion = "no certificate: sorted blocks are not cosets of a subgroup";
  } else {
    out.conclusion = "no certificate: block inequality fails";
  }
  return out;
}

std::string to_string(StateClass c) {
  switch (c) {
    case StateClass::Product:
      return "product";
    case StateClass::MaximallyEntangled:
      return "maximally_entangled";
    case StateClass::Other:
      break;
  }
  return "other";
}

ProductOrMe classify_product_or_me(const PauliBasis& basis, const Vector& psi) {
  if (basis.factors.size() != 2 || basis.factors[0] != basis.factors[1]) {
    throw ValidationError(
        "classify_product_or_me: need a product basis of two equal factors");
  }
  const int d = basis.factors[0];
  if (!is_prime(d)) {
    throw ValidationError("classify_product_or_me: local dimension " +
                          std::to_string(d) + " is not prime");
  }
  if (psi.size() != d * d) {
    throw DimensionError("classify_product_or_me: state has wrong dimension");
  }
  const Vector unit = psi / psi.norm();
  const Matrix gamma = noisy_conjugate_image(basis, projector(unit)).matrix;
  const Decomposition dec = is_decomposable(gamma);
  ProductOrMe out;
  out.d2_decomposable = static_cast<int>(dec.blocks.size()) == d * d;
  for (const auto& block : dec.blocks) {
    if (static_cast<int>(block.size()) != d * d) out.d2_decomposable = false;
  }
  const RealVector s = singular_values(unvec_row_major(unit, d, d));
  out.schmidt.assign(s.data(), s.data() + s.size());
  const double flat = 1.0 / std::sqrt(static_cast<double>(d));
  bool all_flat = true;
  for (double x : out.schmidt) all_flat = all_flat && std::abs(x - flat) < 1e-8;
  if (out.schmidt.size() > 1 && out.schmidt[1] < 1e-8) {
    out.state_class = StateClass::Product;
  } else if (all_flat) {
    out.state_class = StateClass::MaximallyEntangled;
  }
  return out;
}

}  // namespace qcc
