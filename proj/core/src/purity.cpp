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


#include "qcc/purity.hpp"

#include <cmath>
#include <string>

#include "qcc/conjugate.hpp"
#include "qcc/error.hpp"
#include "qcc/parallel.hpp"
#include "qcc/pauli.hpp"

namespace qcc {

namespace {

// Objective being optimised: p-norm (maximise) or entropy (minimise).
struct Objective {
  bool entropy = false;
  double p = 2.0;
  LogBase base = LogBase::Two;

  double value_of(const RealVector& lam) const {
    if (entropy) {
      std::vector<double> probs(lam.size());
      for (Eigen::Index i = 0; i < lam.size(); ++i) {
        probs[i] = std::max(lam(i), 0.0);
      }
      return shannon_entropy(probs, base);
    }
    const double top = std::max(lam(0), 0.0);
    if (std::isinf(p) || top == 0.0) return top;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      if (lam(i) > 0.0) acc += std::pow(lam(i) / top, p);
    }
    return top * std::pow(acc, 1.0 / p);
  }

  bool better(double a, double b) const { return entropy ? a < b : a > b; }
};

struct Run {
  double value = 0.0;
  Vector state;
  bool converged = false;
  int iterations = 0;
};

Vector top_eigenvector(const Matrix& m) { return hermitian_eigen(m).vectors.col(0); }

// Global phase fixed so the largest-modulus entry is real positive.
Vector normalise_phase(Vector psi) {
  Eigen::Index arg = 0;
  psi.cwiseAbs().maxCoeff(&arg);
  const Complex z = psi(arg);
  if (std::abs(z) > 0.0) psi *= std::conj(z) / std::abs(z);
  return psi / psi.norm();
}

Run ascend(const KrausChannel& channel, const Objective& obj, Vector psi,
           const PurityOptions& opts) {
  psi /= psi.norm();
  Run run;
  HermitianEigen eig = hermitian_eigen(apply_channel(channel, projector(psi)));
  run.value = obj.value_of(eig.values);
  run.state = psi;
  for (int it = 0; it < opts.max_iter; ++it) {
    // Pull back the gradient of the objective at the current output.
    RealVector weights = eig.values;
    if (obj.entropy) {
      for (Eigen::Index i = 0; i < weights.size(); ++i) {
        weights(i) = std::log(std::max(weights(i), 1e-300));
      }
    } else if (std::isinf(obj.p)) {
      weights.setZero();
      weights(0) = 1.0;
    } else {
      for (Eigen::Index i = 0; i < weights.size(); ++i) {
        weights(i) = weights(i) > 0.0 ? std::pow(weights(i), obj.p - 1.0) : 0.0;
      }
    }
    const Matrix grad = eig.vectors * weights.asDiagonal() * eig.vectors.adjoint();
    const Vector next = top_eigenvector(adjoint_apply(channel, grad));
    HermitianEigen next_eig = hermitian_eigen(apply_channel(channel, projector(next)));
    const double next_value = obj.value_of(next_eig.values);
    run.iterations = it + 1;
    if (!obj.better(next_value, run.value)) {
      run.converged = true;
      break;
    }
    const double change = std::abs(next_value - run.value);
    run.value = next_value;
    run.state = next;
    eig = std::move(next_eig);
    if (change <= opts.tol * std::max(1.0, std::abs(run.value))) {
      run.converged = true;
      break;
    }
  }
  run.state = normalise_phase(run.state);
  return run;
}

PurityReport optimise(const KrausChannel& channel, const Objective& obj,
                      const PurityOptions& opts) {
  if (opts.restarts < 0 || opts.max_iter < 1) {
    throw ValidationError("purity: restarts must be >= 0 and max_iter >= 1");
  }
  const int d = channel.d_in();
  std::vector<Vector> starts;
  for (const auto& s : opts.initial_states) {
    if (s.size() != d || !(s.norm() > 0.0)) {
      throw DimensionError("purity: initial state has wrong dimension");
    }
    starts.push_back(s);
  }
  for (int r = 0; r < opts.restarts; ++r) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
    starts.push_back(random_pure_state(d, rng));
  }
  if (starts.empty()) starts.push_back(Vector::Unit(d, 0));

  std::vector<Run> runs(starts.size());
  parallel_for(starts.size(), opts.threads, [&](std::size_t i) {
    runs[i] = ascend(channel, obj, starts[i], opts);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (obj.better(runs[i].value, runs[best].value)) best = i;
  }
  PurityReport report;
  report.value = runs[best].value;
  report.optimizer_state = runs[best].state;
  report.p = obj.entropy ? 0.0 : obj.p;
  report.restarts = static_cast<int>(runs.size());
  report.converged = runs[best].converged;
  report.iterations = runs[best].iterations;
  return report;
}

}  // namespace

double output_p_norm(const KrausChannel& channel, const Vector& psi, double p) {
  return schatten_norm(apply_channel(channel, projector(psi / psi.norm())), p);
}

double output_entropy(const KrausChannel& channel, const Vector& psi,
                      LogBase base) {
  Objective obj;
  obj.entropy = true;
  obj.base = base;
  return obj.value_of(
      eigenvalues_hermitian(apply_channel(channel, projector(psi / psi.norm()))));
}

PurityReport nu_p(const KrausChannel& channel, double p,
                  const PurityOptions& opts) {
  if (!(p >= 1.0)) {
    throw ValidationError("nu_p: p must be >= 1, got " + std::to_string(p));
  }
  if (p == 1.0) {
    // Every output is a state, so the trace norm is identically 1.
    PurityReport report;
    report.optimizer_state = Vector::Unit(channel.d_in(), 0);
    report.value = output_p_norm(channel, report.optimizer_state, 1.0);
    report.p = 1.0;
    report.converged = true;
    return report;
  }
  Objective obj;
  obj.p = p;
  return optimise(channel, obj, opts);
}

PurityReport s_min(const KrausChannel& channel, const PurityOptions& opts) {
  Objective obj;
  obj.entropy = true;
  obj.base = opts.base;
  return optimise(channel, obj, opts);
}

SpectrumPair spectrum_pair_check(const KrausChannel& channel,
                                 const Vector& psi, double tol) {
  if (psi.size() != channel.d_in()) {
    throw DimensionError("spectrum_pair_check: state has wrong dimension");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-8) {
    throw ValidationError("spectrum_pair_check: state is not normalised");
  }
  const Matrix rho = projector(psi);
  SpectrumPair out;
  out.channel = nonzero_spectrum(apply_channel(channel, rho), tol);
  out.conjugate = nonzero_spectrum(apply_channel(conjugate_kraus(channel), rho), tol);
  out.max_deviation = spectrum_deviation(out.channel, out.conjugate);
  return out;
}

GapReport multiplicativity_gap(const KrausChannel& a, const KrausChannel& b,
                               double p, const PurityOptions& opts,
                               double witness_tol) {
  const PurityReport ra = nu_p(a, p, opts);
  const PurityReport rb = nu_p(b, p, opts);
  PurityOptions joint = opts;
  joint.initial_states.insert(
      joint.initial_states.begin(),
      kron(ra.optimizer_state, rb.optimizer_state));
  const PurityReport rab = nu_p(tensor(a, b), p, joint);
  GapReport out;
  out.lhs = rab.value;
  out.rhs = ra.value * rb.value;
  out.gap = out.lhs - out.rhs;
  if (out.gap > witness_tol) out.witness_state = rab.optimizer_state;
  return out;
}

GapReport additivity_gap_entropy(const KrausChannel& a, const KrausChannel& b,
                                 const PurityOptions& opts,
                                 double witness_tol) {
  const PurityReport ra = s_min(a, opts);
  const PurityReport rb = s_min(b, opts);
  PurityOptions joint = opts;
  joint.initial_states.insert(
      joint.initial_states.begin(),
      kron(ra.optimizer_state, rb.optimizer_state));
  const PurityReport rab = s_min(tensor(a, b), joint);
  GapReport out;
  out.lhs = rab.value;
  out.rhs = ra.value + rb.value;
  out.gap = out.rhs - out.lhs;
  if (out.gap > witness_tol) out.witness_state = rab.optimizer_state;
  return out;
}

double holevo_capacity_weyl(const PauliDiagonalChannel& channel,
                            const PurityOptions& opts) {
  const double d = channel.basis().d;
  const double log_d = opts.base == LogBase::Two ? std::log2(d) : std::log(d);
  return log_d - s_min(channel.channel(), opts).value;
}

}  // namespace qcc
