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


#include "qcc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "qcc/channel.hpp"
#include "qcc/conjugate.hpp"
#include "qcc/ebt.hpp"
#include "qcc/error.hpp"
#include "qcc/gl.hpp"
#include "qcc/parallel.hpp"
#include "qcc/pauli.hpp"
#include "qcc/purity.hpp"
#include "qcc/random.hpp"

namespace qcc::verify {

namespace {

std::uint64_t name_hash(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

int pick(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(hi - lo + 1)));
}

// Random channel with d_in, d_out in [lo, hi] and a feasible Kraus count.
KrausChannel draw_channel(Rng& rng, int lo, int hi, int max_kraus) {
  const int d_in = pick(rng, lo, hi);
  const int d_out = pick(rng, lo, hi);
  const int min_kraus = (d_in + d_out - 1) / d_out;
  const int n = pick(rng, min_kraus, std::max(min_kraus, max_kraus));
  return random_channel(d_in, d_out, n, rng);
}

// Runs fn(trial, rng) -> error for every trial; a trial passes when its
// error is below threshold. Exceptions count as failures.
template <typename Fn>
Check run_trials(const std::string& name, std::uint64_t seed, int trials,
                 double threshold, int threads, Fn fn) {
  std::vector<double> errors(trials, 0.0);
  std::vector<std::string> messages(trials);
  const std::uint64_t base = derive_seed(seed, name_hash(name));
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
    Rng rng(derive_seed(base, t));
    try {
      errors[t] = fn(static_cast<int>(t), rng);
    } catch (const std::exception& e) {
      errors[t] = kInf;
      messages[t] = e.what();
    }
  });
  Check check;
  check.name = name;
  check.trials = trials;
  check.threshold = threshold;
  std::string first_failure;
  for (int t = 0; t < trials; ++t) {
    const double e = errors[t];
    if (e < threshold) {
      ++check.passed;
    } else if (first_failure.empty()) {
      first_failure = "trial " + std::to_string(t) +
                      (messages[t].empty() ? "" : ": " + messages[t]);
    }
    if (!(e <= check.worst)) check.worst = e;
  }
  check.pass = check.passed == trials;
  check.detail = "worst " + sci(check.worst) + " (threshold " +
                 sci(threshold) + ")";
  if (!first_failure.empty()) check.detail += "; first failure " + first_failure;
  return check;
}

double unit_residual(const KrausChannel& a, const KrausChannel& b) {
  const int d = a.d_in();
  double worst = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const Matrix e = matrix_unit(d, d, j, k);
      worst = std::max(worst,
                       max_abs(apply_channel(a, e) - apply_channel(b, e)));
    }
  }
  return worst;
}

double projector_defect(const Matrix& w) {
  const Matrix p = w.adjoint() * w;
  return max_abs(p * p - p);
}

PurityOptions purity_options(std::uint64_t seed, int restarts = 32) {
  PurityOptions opts;
  opts.seed = seed;
  opts.restarts = restarts;
  return opts;
}

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// ---------------------------------------------------------------- numkit

Check partial_trace_kron(std::uint64_t seed, int trials) {
  return run_trials("partial_trace_kron", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const int da = pick(rng, 1, 4);
                      const int db = pick(rng, 1, 4);
                      const Matrix a = ginibre(da, da, rng);
                      const Matrix b = ginibre(db, db, rng);
                      const Matrix ab = kron(a, b);
                      return std::max(
                          max_abs(partial_trace(ab, da, db, Keep::A) -
                                  a * b.trace()),
                          max_abs(partial_trace(ab, da, db, Keep::B) -
                                  a.trace() * b));
                    });
}

Check schatten_monotone(std::uint64_t seed, int trials) {
  return run_trials("schatten_monotone_in_p", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const int d = pick(rng, 2, 5);
                      const Matrix m = ginibre(d, d, rng);
                      const double ps[] = {1.0, 1.5, 2.0, 3.0, kInf};
                      double worst = 0.0;
                      double prev = schatten_norm(m, ps[0]);
                      for (int i = 1; i < 5; ++i) {
                        const double cur = schatten_norm(m, ps[i]);
                        worst = std::max(worst, (cur - prev) / prev);
                        prev = cur;
                      }
                      return worst;
                    });
}

Check entropy_bounds(std::uint64_t seed, int trials) {
  return run_trials("entropy_bounds", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const int d = pick(rng, 2, 6);
                      const double s =
                          von_neumann_entropy(random_density_matrix(d, rng));
                      return std::max({0.0, -s, s - std::log2(d)});
                    });
}

Check haar_unitarity(std::uint64_t seed, int trials) {
  return run_trials("haar_unitarity", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const int d = pick(rng, 1, 8);
                      const Matrix u = haar_unitary(d, rng);
                      return max_abs(u.adjoint() * u - identity(d));
                    });
}

Check doubly_stochastic_majorization(std::uint64_t seed, int trials) {
  return run_trials(
      "doubly_stochastic_majorization", seed, trials, 0.5, 1,
      [](int, Rng& rng) {
        const int n = pick(rng, 2, 8);
        const std::vector<double> x = random_probability_vector(n, rng);
        const std::vector<double> mix = random_probability_vector(4, rng);
        std::vector<double> y(n, 0.0);
        for (double weight : mix) {
          std::vector<int> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          for (int i = n - 1; i > 0; --i) {
            std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
          }
          for (int i = 0; i < n; ++i) y[i] += weight * x[perm[i]];
        }
        return majorizes(x, y) ? 0.0 : 1.0;
      });
}

// --------------------------------------------------------------- channel

Check choi_round_trip(std::uint64_t seed, int trials) {
  return run_trials("choi_round_trip", seed, trials, 1e-10, 1,
                    [](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 1, 4, 6);
                      const KrausChannel g = choi_to_kraus(kraus_to_choi(ch));
                      double err = unit_residual(ch, g);
                      if (static_cast<int>(g.size()) != kraus_rank(ch)) err = kInf;
                      return err;
                    });
}

Check adjoint_unital(std::uint64_t seed, int trials) {
  return run_trials("adjoint_unital", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 1, 4, 6);
                      return max_abs(adjoint_apply(ch, identity(ch.d_out())) -
                                     identity(ch.d_in()));
                    });
}

Check duality_pairing(std::uint64_t seed, int trials) {
  return run_trials("duality_pairing", seed, trials, 1e-11, 1,
                    [](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 1, 4, 6);
                      const Matrix a = ginibre(ch.d_out(), ch.d_out(), rng);
                      const Matrix b = ginibre(ch.d_in(), ch.d_in(), rng);
                      const Complex lhs =
                          (adjoint_apply(ch, a).adjoint() * b).trace();
                      const Complex rhs =
                          (a.adjoint() * apply_channel(ch, b)).trace();
                      return std::abs(lhs - rhs);
                    });
}

Check tensor_factorizes(std::uint64_t seed, int trials) {
  return run_trials("tensor_factorizes", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const KrausChannel a = draw_channel(rng, 1, 3, 3);
                      const KrausChannel b = draw_channel(rng, 1, 3, 3);
                      const Matrix r1 = random_density_matrix(a.d_in(), rng);
                      const Matrix r2 = random_density_matrix(b.d_in(), rng);
                      return max_abs(
                          apply_channel(tensor(a, b), kron(r1, r2)) -
                          kron(apply_channel(a, r1), apply_channel(b, r2)));
                    });
}

Check ancilla_matches(std::uint64_t seed, int trials) {
  return run_trials("ancilla_matches_kraus", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 1, 4, 6);
                      const AncillaRep rep = kraus_to_ancilla(ch);
                      const Matrix rho = random_density_matrix(ch.d_in(), rng);
                      return std::max(
                          max_abs(rep.v.adjoint() * rep.v - identity(ch.d_in())),
                          max_abs(ancilla_apply(rep, rho) -
                                  apply_channel(ch, rho)));
                    });
}

Check kraus_relation_mixing(std::uint64_t seed, int trials) {
  return run_trials(
      "kraus_relation_unitary_mixing", seed, trials, 1e-8, 1,
      [](int, Rng& rng) {
        const KrausChannel g = choi_to_kraus(kraus_to_choi(draw_channel(rng, 1, 3, 4)));
        const int kappa = static_cast<int>(g.size());
        const Matrix u = haar_unitary(kappa, rng);
        std::vector<Matrix> f(kappa, Matrix::Zero(g.d_out(), g.d_in()));
        for (int j = 0; j < kappa; ++j) {
          for (int k = 0; k < kappa; ++k) f[j] += u(j, k) * g[k];
        }
        const KrausRelation rel = relate_kraus_sets(
            KrausChannel(g.d_in(), g.d_out(), f, 1e-9), g);
        return std::max({rel.residual, max_abs(rel.w - u),
                         rel.rank == kappa ? 0.0 : kInf});
      });
}

// ------------------------------------------------------------- conjugate

Check conjugate_shape(std::uint64_t seed, int trials) {
  return run_trials("conjugate_shape_and_cpt", seed, trials, 1e-10, 1,
                    [](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 1, 4, 6);
                      const KrausChannel c = conjugate_kraus(ch);
                      if (static_cast<int>(c.size()) != ch.d_out() ||
                          c.d_out() != static_cast<int>(ch.size())) {
                        return kInf;
                      }
                      return validate_cpt(c).max_residual;
                    });
}

// ---------------------------------------------------------------- purity

Check nu_monotone(std::uint64_t seed, int trials, int threads) {
  return run_trials("nu_p_monotone_in_p", seed, trials, 1e-8, threads,
                    [seed](int t, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 2, 3, 3);
                      const PurityOptions opts =
                          purity_options(derive_seed(seed, t), 16);
                      const double ps[] = {1.5, 2.0, 3.0, kInf};
                      double prev = 1.0;
                      double worst = 0.0;
                      for (double p : ps) {
                        const double v = nu_p(ch, p, opts).value;
                        worst = std::max(worst, v - prev);
                        prev = v;
                      }
                      return worst;
                    });
}

Check mult_gap_nonnegative(std::uint64_t seed, int trials, int threads) {
  return run_trials("multiplicativity_gap_nonnegative", seed, trials, 1e-8,
                    threads, [seed](int t, Rng& rng) {
                      const KrausChannel a = draw_channel(rng, 2, 2, 3);
                      const KrausChannel b = draw_channel(rng, 2, 2, 3);
                      const GapReport gap = multiplicativity_gap(
                          a, b, 2.0, purity_options(derive_seed(seed, t), 8));
                      return std::max(0.0, -gap.gap);
                    });
}

// ----------------------------------------------------------------- pauli

Check phase_tables() {
  std::vector<PauliBasis> bases;
  for (int d = 2; d <= 5; ++d) bases.push_back(build_basis(d));
  bases.push_back(product_basis(build_basis(2), build_basis(2)));
  bases.push_back(product_basis(build_basis(2), build_basis(3)));
  return run_trials("phase_tables_and_orthogonality", 0,
                    static_cast<int>(bases.size()), 1e-12, 1,
                    [&bases](int t, Rng&) {
                      const PauliBasis& b = bases[t];
                      double worst = phase_table_defect(b);
                      for (int m = 0; m < b.size(); ++m) {
                        worst = std::max(worst, max_abs(b.ops[m].adjoint() * b.ops[m] -
                                                        identity(b.d)));
                        for (int n = 0; n < b.size(); ++n) {
                          const Complex ip = (b.ops[m].adjoint() * b.ops[n]).trace();
                          worst = std::max(
                              worst, std::abs(ip - (m == n ? Complex(b.d) : 0.0)));
                        }
                      }
                      return worst;
                    });
}

Check lambda_checks(std::uint64_t seed, int trials) {
  return run_trials(
      "lambda_symmetry_and_action", seed, trials, 1e-12, 1,
      [](int, Rng& rng) {
        const int d = pick(rng, 2, 4);
        const PauliBasis basis = build_basis(d);
        const PauliDiagonalChannel ch(basis,
                                      random_probability_vector(d * d, rng));
        const std::vector<Complex> lambda = lambda_spectrum(ch);
        double worst = 0.0;
        for (int n = 0; n < d * d; ++n) {
          const int j = n / d;
          const int k = n % d;
          const int mirror = ((d - j) % d) * d + (d - k) % d;
          worst = std::max(worst, std::abs(lambda[n] - std::conj(lambda[mirror])));
          const Complex direct =
              (basis.ops[n].adjoint() * apply_channel(ch.channel(), basis.ops[n]))
                  .trace() /
              static_cast<double>(d);
          worst = std::max(worst, std::abs(lambda[n] - direct));
        }
        return worst;
      });
}

Check composition_law(std::uint64_t seed, int trials) {
  return run_trials(
      "conjugate_composition_law", seed, trials, 1e-12, 1,
      [](int, Rng& rng) {
        const int d = pick(rng, 2, 4);
        const PauliBasis basis = build_basis(d);
        const std::vector<double> a = random_probability_vector(d * d, rng);
        const PauliDiagonalChannel ch(basis, a);
        const Matrix rho = random_density_matrix(d, rng);
        RealVector sqrt_a(d * d);
        for (int m = 0; m < d * d; ++m) sqrt_a(m) = std::sqrt(a[m]);
        const Matrix gamma = noisy_conjugate_image(basis, rho).matrix;
        const Matrix expected = static_cast<double>(d * d) *
                                sqrt_a.asDiagonal() * gamma * sqrt_a.asDiagonal();
        return max_abs(apply_channel(conjugate_kraus(ch.channel()), rho) - expected);
      });
}

Check noise_identity_and_majorization(std::uint64_t seed, int trials) {
  return run_trials(
      "noise_identity_and_majorization", seed, trials, 1e-10, 1,
      [](int, Rng& rng) {
        const int d = pick(rng, 2, 4);
        const PauliBasis basis = build_basis(d);
        const std::vector<double> a = random_probability_vector(d * d, rng);
        const PauliDiagonalChannel ch(basis, a);
        const Matrix gamma =
            noisy_conjugate_image(basis, projector(random_pure_state(d, rng)))
                .matrix;
        RealVector av(d * d);
        for (int m = 0; m < d * d; ++m) av(m) = a[m];
        const RealVector sqrt_a = av.cwiseSqrt();
        const Matrix left = sqrt_a.asDiagonal() * gamma * sqrt_a.asDiagonal();
        const Matrix right = gamma * av.asDiagonal() * gamma;
        double worst = 0.0;
        for (double p : {2.0, 3.0}) {
          worst = std::max(worst, std::abs(schatten_norm(left, p) -
                                           d * schatten_norm(right, p)));
        }
        const RealVector eig =
            eigenvalues_hermitian(static_cast<double>(d * d * d) * right);
        std::vector<double> spectrum(eig.data(), eig.data() + eig.size());
        const MajorizationBound mb = majorization_bound(ch, 2.0);
        if (!majorizes(mb.beta, spectrum, 1e-10)) worst = kInf;
        return worst;
      });
}

Check qc_certification() {
  return run_trials(
      "qc_infinity_certificate", 0, 3, 1e-6, 1, [](int t, Rng&) {
        const int d = 2 + t % 2;
        const PauliBasis basis = build_basis(d);
        std::vector<double> q(d);
        double total = 0.0;
        for (int j = 0; j < d; ++j) total += q[j] = 1.0 / (j + 2.0 + t);
        for (double& x : q) x /= total;
        const PauliDiagonalChannel ch = qc_channel(basis, q);
        const InfinityCheck check = p_infty_multiplicativity_check(ch, 2);
        if (!check.certified) return kInf;
        PurityOptions opts = purity_options(0x9c, 16);
        const PurityReport single = nu_p(ch.channel(), kInf, opts);
        opts.initial_states = {kron(single.optimizer_state, single.optimizer_state)};
        const PurityReport pair =
            nu_p(tensor(ch.channel(), ch.channel()), kInf, opts);
        return std::abs(pair.value - single.value * single.value);
      });
}

Check nu2_witness_bound(std::uint64_t seed, int trials) {
  return run_trials(
      "nu2_bound_dominates", seed, trials, 1e-9, 1, [](int, Rng& rng) {
        const int d = pick(rng, 2, 4);
        const PauliDiagonalChannel ch(build_basis(d),
                                      random_probability_vector(d * d, rng));
        const Nu2Bound nb = nu2_bound(ch);
        double err = 0.0;
        for (int s = 0; s < 20; ++s) {
          const double v = output_p_norm(ch.channel(), random_pure_state(d, rng), 2.0);
          err = std::max(err, v - nb.bound);
        }
        return err;
      });
}

// ------------------------------------------------------------------- ebt

Check pseudodiag_matches(std::uint64_t seed, int trials) {
  return run_trials("pseudodiag_matches_conjugate", seed, trials, 1e-10, 1,
                    [](int, Rng& rng) {
                      const int d_in = pick(rng, 2, 3);
                      const EBTChannel e =
                          random_ebt(d_in, pick(rng, 2, 3), pick(rng, d_in, 5), rng);
                      const EbtConjugate c = conjugate_ebt(e);
                      const Matrix rho = random_density_matrix(d_in, rng);
                      return std::max(
                          choi_distance(pseudodiag_kraus(e), c.channel),
                          max_abs(hadamard_apply(c.form, rho) -
                                  apply_channel(c.channel, rho)));
                    });
}

Check generic_not_hadamard(std::uint64_t seed, int trials) {
  return run_trials("generic_channel_not_hadamard", seed, trials, 0.5, 1,
                    [](int, Rng& rng) {
                      const KrausChannel ch = random_channel(
                          pick(rng, 2, 3), pick(rng, 2, 3), pick(rng, 2, 4), rng);
                      return is_hadamard_form(ch).verdict == Verdict::No ? 0.0
                                                                         : 1.0;
                    });
}

// -------------------------------------------------------------------- gl

Check theta_pure_states(std::uint64_t seed, int trials) {
  return run_trials("theta_linearises_pure_inputs", seed, trials, 1e-12, 1,
                    [](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 2, 3, 3);
                      double worst = 0.0;
                      for (int p = 1; p <= 3; ++p) {
                        const Matrix th = theta(ch, p);
                        const Matrix psi =
                            projector(random_pure_state(ch.d_in(), rng));
                        worst = std::max(
                            worst, std::abs(output_power_trace(ch, psi, p) -
                                            linearised_value(psi, th, p)));
                      }
                      return worst;
                    });
}

Check theta_mixed_violation(std::uint64_t seed) {
  Rng rng(derive_seed(seed, name_hash("theta_mixed_violation")));
  const KrausChannel ch = random_channel(2, 2, 3, rng);
  const ThetaViolation v = find_theta_violation(ch, 2, rng);
  Check check;
  check.name = "theta_fails_on_mixed_inputs";
  check.trials = 1;
  check.passed = v.found ? 1 : 0;
  check.pass = v.found;
  check.worst = v.deviation;
  check.threshold = 1e-3;
  check.detail = "deviation " + sci(v.deviation) + " after " +
                 std::to_string(v.tries) + " mixed states (needs > 1.000e-03)";
  return check;
}

Check shift_inverse() {
  return run_trials("shift_left_right_inverse", 0, 4, 1e-15, 1,
                    [](int t, Rng&) {
                      const int p = t + 1;
                      const Matrix l = shift_operator(p, ShiftDirection::Left, 2);
                      const Matrix r = shift_operator(p, ShiftDirection::Right, 2);
                      return max_abs(l * r - identity(ipow(2, p)));
                    });
}

int or_default(int trials, int fallback) { return trials > 0 ? trials : fallback; }

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

// ------------------------------------------------- criterion-sized checks

Check spectrum_law(std::uint64_t seed, int channels, int inputs,
                   int threads) {
  return run_trials("spectrum_law", seed, channels, 1e-9, threads,
                    [inputs](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 2, 4, 6);
                      double worst = 0.0;
                      for (int i = 0; i < inputs; ++i) {
                        worst = std::max(
                            worst, spectrum_pair_check(
                                       ch, random_pure_state(ch.d_in(), rng))
                                       .max_deviation);
                      }
                      return worst;
                    });
}

Check conjugate_routes(std::uint64_t seed, int channels, int threads) {
  return run_trials(
      "conjugate_routes_related", seed, channels, 1e-8, threads,
      [](int, Rng& rng) {
        const KrausChannel ch = draw_channel(rng, 2, 3, 4);
        const std::vector<KrausChannel> routes{
            conjugate_kraus(ch),
            choi_to_kraus(conjugate_choi(kraus_to_choi(ch))),
            conjugate_ancilla(kraus_to_ancilla(ch))};
        double worst = 0.0;
        for (std::size_t i = 0; i < routes.size(); ++i) {
          for (std::size_t j = 0; j < routes.size(); ++j) {
            if (i == j) continue;
            const KrausRelation rel =
                find_relating_isometry(routes[i], routes[j]);
            worst = std::max({worst, rel.residual, projector_defect(rel.w)});
            if (rel.rank != kraus_rank(ch)) worst = kInf;
          }
        }
        return worst;
      });
}

Check double_conjugate(std::uint64_t seed, int channels, int threads) {
  return run_trials("double_conjugate_recovers_channel", seed, channels, 1e-8,
                    threads, [](int, Rng& rng) {
                      const KrausChannel ch = draw_channel(rng, 2, 3, 4);
                      const KrausRelation rel = find_relating_isometry(
                          conjugate_kraus(conjugate_kraus(ch)), ch);
                      return std::max(rel.residual, projector_defect(rel.w));
                    });
}

Check conjugate_tensor_compatibility(std::uint64_t seed, int channels,
                                     int threads) {
  return run_trials(
      "conjugate_of_tensor", seed, channels, 1e-8, threads, [](int, Rng& rng) {
        const KrausChannel a = draw_channel(rng, 2, 2, 3);
        const KrausChannel b = draw_channel(rng, 2, 3, 3);
        const KrausRelation rel = find_relating_isometry(
            tensor(conjugate_kraus(a), conjugate_kraus(b)),
            conjugate_kraus(tensor(a, b)));
        return std::max(rel.residual, projector_defect(rel.w));
      });
}

Check nu_conjugate_agreement(std::uint64_t seed, int channels, int threads) {
  return run_trials(
      "nu_p_and_s_min_equal_for_conjugate", seed, channels, 1e-6, threads,
      [seed](int t, Rng& rng) {
        const KrausChannel ch = random_channel(2, 2, pick(rng, 2, 4), rng);
        const KrausChannel conj = conjugate_kraus(ch);
        const PurityOptions opts = purity_options(derive_seed(seed, t));
        double worst = 0.0;
        for (double p : {1.5, 2.0, 3.0, kInf}) {
          worst = std::max(worst, std::abs(nu_p(ch, p, opts).value -
                                           nu_p(conj, p, opts).value));
        }
        return std::max(worst, std::abs(s_min(ch, opts).value -
                                         s_min(conj, opts).value));
      });
}

Check qubit_closed_form(int grid, int threads) {
  const PauliBasis basis = build_basis(2);
  return run_trials(
      "qubit_pauli_closed_form", 0, grid * grid, 1e-8, threads,
      [&basis, grid](int t, Rng&) {
        const double x = static_cast<double>(t / grid) / (grid - 1);
        const double y = static_cast<double>(t % grid) / (grid - 1);
        const PauliDiagonalChannel ch(
            basis, {(1 - x) * (1 - y), x * (1 - y), (1 - x) * y, x * y});
        const std::vector<Complex> lambda = lambda_spectrum(ch);
        double top = 0.0;
        for (int k = 1; k < 4; ++k) top = std::max(top, std::abs(lambda[k]));
        const double hi = 0.5 * (1.0 + top);
        const double lo = 0.5 * (1.0 - top);
        double worst = 0.0;
        for (double p : {2.0, 3.0, kInf}) {
          const double closed =
              std::isinf(p) ? hi : std::pow(std::pow(hi, p) + std::pow(lo, p), 1.0 / p);
          const double found = nu_p(ch.channel(), p, purity_options(t, 8)).value;
          worst = std::max(worst, std::abs(found - closed));
        }
        return worst;
      });
}

Check depolarizing_bounds() {
  Check check;
  check.name = "depolarizing_multiplicativity_and_bound";
  const PurityOptions opts = purity_options(0xdeb, 16);
  double gap = 0.0;
  double attained = 0.0;
  double product_excess = kInf;
  for (int d : {2, 3}) {
    const PauliDiagonalChannel dep = depolarizing(build_basis(d), 0.5);
    gap = std::max(gap, std::abs(multiplicativity_gap(dep.channel(), dep.channel(),
                                                      2.0, opts)
                                     .gap));
    const double nu_inf = nu_p(dep.channel(), kInf, opts).value;
    attained = std::max(attained,
                        std::abs(majorization_bound(dep, kInf).bound - nu_inf));
    if (d == 2) {
      const PauliDiagonalChannel pair = product_channel(dep, dep);
      product_excess = majorization_bound(pair, kInf).bound -
                       nu_p(pair.channel(), kInf, opts).value;
    }
  }
  const bool ok_gap = gap < 1e-6;
  const bool ok_attained = attained < 1e-9;
  const bool ok_strict = product_excess > 1e-3;
  check.trials = 3;
  check.passed = ok_gap + ok_attained + ok_strict;
  check.pass = check.passed == 3;
  check.worst = std::max(gap, attained);
  check.threshold = 1e-6;
  check.detail = "|nu2(PxP) - nu2(P)^2| " + sci(gap) +
                 " (< 1e-6); bound - nu_inf single " + sci(attained) +
                 " (< 1e-9); bound - nu_inf product " + sci(product_excess) +
                 " (> 1e-3)";
  return check;
}

Check noisy_conjugate_unitary(std::uint64_t seed, int trials) {
  Check out;
  out.name = "noisy_conjugate_unitary_form";
  out.pass = true;
  for (int d : {2, 3, 4}) {
    const PauliBasis basis = build_basis(d);
    std::vector<Matrix> noisy;
    for (const auto& t : basis.ops) noisy.push_back(t / static_cast<double>(d));
    const KrausChannel conj =
        conjugate_kraus(KrausChannel(d, d, noisy));
    const Matrix u = find_u_t(basis.ops, {});
    const Check c = run_trials(
        "noisy_conjugate_unitary_d" + std::to_string(d), seed, trials, 1e-10,
        1, [&](int, Rng& rng) {
          const Matrix rho = random_density_matrix(d, rng);
          const Matrix gamma = apply_channel(conj, rho);
          const Matrix predicted = u * kron(identity(d), rho) * u.adjoint() /
                                   static_cast<double>(d);
          return std::max((gamma - predicted).norm(),
                          (recover_state(u, gamma, d) - rho).norm());
        });
    out.trials += c.trials;
    out.passed += c.passed;
    out.worst = std::max(out.worst, c.worst);
    out.pass = out.pass && c.pass;
  }
  out.threshold = 1e-10;
  out.detail = "worst " + sci(out.worst) + " (threshold 1.000e-10)";
  return out;
}

Check nc_properties_check(std::uint64_t seed, int d, int trials) {
  const PauliBasis basis = build_basis(d);
  return run_trials("nc_properties_d" + std::to_string(d), seed, trials, 1e-10,
                    1, [&basis, d](int, Rng& rng) {
                      const NcProperties p = nc_properties(
                          noisy_conjugate_image(
                              basis, projector(random_pure_state(d, rng)))
                              .matrix,
                          d);
                      if (p.projector_rank != d) return kInf;
                      return std::max({p.projector_defect, p.diagonal_defect,
                                       p.entry_excess,
                                       p.doubly_stochastic_defect});
                    });
}

Check nc_explicit_check(std::uint64_t seed, int trials) {
  Check out;
  out.name = "nc_explicit_formula";
  for (int d : {2, 3, 5}) {
    const PauliBasis basis = build_basis(d);
    const Check c = run_trials(
        "nc_explicit_d" + std::to_string(d), seed, trials, 1e-12, 1,
        [&basis, d](int, Rng& rng) {
          const Vector psi = random_pure_state(d, rng);
          return max_abs(nc_image_explicit(d, psi) -
                         noisy_conjugate_image(basis, projector(psi)).matrix);
        });
    out.trials += c.trials;
    out.passed += c.passed;
    out.worst = std::max(out.worst, c.worst);
  }
  out.pass = out.passed == out.trials;
  out.threshold = 1e-12;
  out.detail = "worst " + sci(out.worst) + " (threshold 1.000e-12)";
  return out;
}

Check nu2_bound_check(std::uint64_t seed, int trials, int threads) {
  const PauliBasis basis = build_basis(3);
  return run_trials(
      "nu2_bound_attained_d3", seed, trials, 1e-9, threads,
      [&basis, seed](int t, Rng& rng) {
        const PauliDiagonalChannel ch(basis, random_probability_vector(9, rng));
        const Nu2Bound nb = nu2_bound(ch);
        const double nu = nu_p(ch.channel(), 2.0,
                               purity_options(derive_seed(seed, t), 16))
                              .value;
        if (!nb.witness_state) return kInf;
        return std::max(nu - nb.bound, std::abs(nb.witness_value - nb.bound));
      });
}

Check axes_closed_form(std::uint64_t seed, int trials, int threads) {
  const PauliBasis basis = build_basis(3);
  // X, Z, XZ and XZ^2 generate the four axes of a qutrit.
  const int generators[] = {3, 1, 4, 5};
  return run_trials(
      "axes_channel_closed_form", seed, trials, 1e-8, threads,
      [&](int t, Rng& rng) {
        for (int attempt = 0; attempt < 100000; ++attempt) {
          const double s = rng.uniform(-0.5, 1.0);
          std::vector<Axis> axes;
          double rest = 1.0 - s;
          for (int g : generators) {
            axes.push_back({g, rng.uniform(-0.3, 0.6)});
            rest -= axes.back().t;
          }
          const double u = rest;
          try {
            const PauliDiagonalChannel ch = axes_channel(basis, s, axes, u);
            const double lambda = axes_lambda(basis, s, axes);
            const double closed = (1.0 + 2.0 * lambda * lambda) / 3.0;
            const double nu = nu_p(ch.channel(), 2.0,
                                   purity_options(derive_seed(seed, t), 16))
                                  .value;
            return std::abs(nu * nu - closed);
          } catch (const ValidationError&) {
            continue;
          }
        }
        return kInf;
      });
}

Check gl_identities(std::uint64_t seed, int trials) {
  return run_trials(
      "linearisation_identities", seed, trials, 1e-12, 1, [](int, Rng& rng) {
        const KrausChannel ch = draw_channel(rng, 2, 3, 3);
        double worst = 0.0;
        for (int p : {2, 3}) {
          const GlResiduals r = verify_gl_identity(ch, p);
          const Matrix rho = random_density_matrix(ch.d_in(), rng);
          const Complex lin = linearised_value(rho, omega(ch, p), p);
          worst = std::max({worst, r.res1, r.res2,
                            std::abs(lin - output_power_trace(ch, rho, p))});
        }
        return worst;
      });
}

Check cq_conjugate_hadamard(std::uint64_t seed, int trials) {
  return run_trials("extreme_cq_conjugate_is_hadamard", seed, trials, 0.5, 1,
                    [](int, Rng& rng) {
                      const EBTChannel cq =
                          random_extreme_cq(pick(rng, 2, 3), pick(rng, 2, 3), rng);
                      const HadamardDetection h =
                          is_hadamard_form(conjugate_kraus(cq.channel()));
                      return h.verdict == Verdict::Yes && h.orthonormal_frame
                                 ? 0.0
                                 : 1.0;
                    });
}

Check hadamard_conjugate_ebt(std::uint64_t seed, int trials) {
  return run_trials("hadamard_conjugate_is_ebt", seed, trials, 1e-8, 1,
                    [](int, Rng& rng) {
                      const KrausChannel h =
                          pseudodiag_kraus(random_hadamard(pick(rng, 2, 3), rng));
                      const EbtReconstruction e = as_ebt(conjugate_kraus(h));
                      return e.rank_one ? e.residual : kInf;
                    });
}

Check hadamard_multiplicativity(std::uint64_t seed, int pairs, int threads) {
  return run_trials(
      "hadamard_multiplicativity", seed, pairs, 1e-5, threads,
      [seed](int t, Rng& rng) {
        const KrausChannel a =
            pseudodiag_kraus(random_hadamard(pick(rng, 2, 3), rng));
        const KrausChannel b = random_channel(2, 2, pick(rng, 2, 3), rng);
        const PurityOptions opts = purity_options(derive_seed(seed, t), 16);
        double worst = 0.0;
        for (double p : {2.0, 3.0}) {
          worst = std::max(worst,
                           std::abs(multiplicativity_gap(a, b, p, opts).gap));
        }
        return worst;
      });
}

std::vector<std::string> suite_names() {
  return {"numkit", "channel", "conjugate", "purity", "pauli", "ebt", "gl"};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  const std::uint64_t seed = config.seed;
  const int n = config.trials;
  const int th = config.threads;
  SuiteResult out;
  out.suite = name;
  auto& c = out.checks;
  if (name == "numkit") {
    c.push_back(partial_trace_kron(seed, or_default(n, 50)));
    c.push_back(schatten_monotone(seed, or_default(n, 50)));
    c.push_back(entropy_bounds(seed, or_default(n, 50)));
    c.push_back(haar_unitarity(seed, or_default(n, 50)));
    c.push_back(doubly_stochastic_majorization(seed, or_default(n, 50)));
  } else if (name == "channel") {
    c.push_back(choi_round_trip(seed, or_default(n, 50)));
    c.push_back(adjoint_unital(seed, or_default(n, 50)));
    c.push_back(duality_pairing(seed, or_default(n, 50)));
    c.push_back(tensor_factorizes(seed, or_default(n, 50)));
    c.push_back(ancilla_matches(seed, or_default(n, 50)));
    c.push_back(kraus_relation_mixing(seed, or_default(n, 50)));
  } else if (name == "conjugate") {
    c.push_back(spectrum_law(seed, or_default(n, 200), 5, th));
    c.push_back(conjugate_shape(seed, or_default(n, 50)));
    c.push_back(conjugate_routes(seed, or_default(n, 50), th));
    c.push_back(double_conjugate(seed, or_default(n, 20), th));
    c.push_back(conjugate_tensor_compatibility(seed, or_default(n, 10), th));
  } else if (name == "purity") {
    c.push_back(nu_conjugate_agreement(seed, or_default(n, 20), th));
    c.push_back(nu_monotone(seed, or_default(n, 20), th));
    c.push_back(mult_gap_nonnegative(seed, or_default(n, 10), th));
    c.push_back(qubit_closed_form(20, th));
    c.push_back(depolarizing_bounds());
  } else if (name == "pauli") {
    c.push_back(phase_tables());
    c.push_back(lambda_checks(seed, or_default(n, 30)));
    c.push_back(composition_law(seed, or_default(n, 30)));
    c.push_back(noise_identity_and_majorization(seed, or_default(n, 30)));
    for (int d = 2; d <= 5; ++d) {
      c.push_back(nc_properties_check(seed, d, or_default(n, 100)));
    }
    c.push_back(nc_explicit_check(seed, or_default(n, 50)));
    c.push_back(noisy_conjugate_unitary(seed, or_default(n, 50)));
    c.push_back(nu2_witness_bound(seed, or_default(n, 30)));
    c.push_back(nu2_bound_check(seed, or_default(n, 100), th));
    c.push_back(axes_closed_form(seed, or_default(n, 20), th));
    c.push_back(qc_certification());
  } else if (name == "ebt") {
    c.push_back(pseudodiag_matches(seed, or_default(n, 30)));
    c.push_back(generic_not_hadamard(seed, or_default(n, 30)));
    c.push_back(cq_conjugate_hadamard(seed, or_default(n, 20)));
    c.push_back(hadamard_conjugate_ebt(seed, or_default(n, 20)));
    c.push_back(hadamard_multiplicativity(seed, or_default(n, 10), th));
  } else if (name == "gl") {
    c.push_back(shift_inverse());
    c.push_back(theta_pure_states(seed, or_default(n, 20)));
    c.push_back(gl_identities(seed, or_default(n, 20)));
    c.push_back(theta_mixed_violation(seed));
  } else {
    throw ValidationError("unknown suite '" + name + "'");
  }
  return out;
}

std::vector<SuiteResult> run_all(const SuiteConfig& config) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, config));
  return out;
}

}  // namespace qcc::verify
