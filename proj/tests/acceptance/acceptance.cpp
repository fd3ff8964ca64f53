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


// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qcc/channel.hpp"
#include "qcc/cli.hpp"
#include "qcc/gl.hpp"
#include "qcc/random.hpp"
#include "qcc/verify.hpp"

namespace {

using qcc::verify::Check;

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string summary(const Check& c) {
  return c.name + " " + std::to_string(c.passed) + "/" + std::to_string(c.trials) +
         ", " + c.detail;
}

Outcome from_checks(const std::vector<Check>& checks) {
  Outcome o{true, ""};
  for (const auto& c : checks) {
    o.pass = o.pass && c.pass;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += summary(c);
  }
  return o;
}

Outcome with_budget(Outcome o, double seconds, double budget) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "; runtime %.2f s (budget %.0f s)", seconds, budget);
  o.detail += buf;
  o.pass = o.pass && seconds < budget;
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds, 0 when none
  std::function<Outcome()> run;
};

Outcome run_verify_all_twice() {
  auto once = [](const std::vector<std::string>& extra, std::string& out, double& secs) {
    std::vector<std::string> args{"verify", "--suite", "all", "--seed", std::to_string(kSeed)};
    args.insert(args.end(), extra.begin(), extra.end());
    std::ostringstream os;
    std::ostringstream err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = qcc::cli::run_cli(args, os, err);
    secs = seconds_since(t0);
    out = os.str();
    return code;
  };
  std::string first, second;
  double t1 = 0.0, t2 = 0.0;
  const int c1 = once({}, first, t1);
  const int c2 = once({"--threads", "2"}, second, t2);
  Outcome o;
  o.pass = c1 == 0 && c2 == 0 && first == second && !first.empty() && t1 < 300.0 &&
           t2 < 300.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "exit codes %d/%d, reports %s (%zu bytes), runtimes %.2f s and %.2f s (budget 300 s)",
                c1, c2, first == second ? "identical" : "DIFFER", first.size(), t1, t2);
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  namespace v = qcc::verify;
  const std::vector<Criterion> criteria{
      {1, "channel and conjugate share nonzero output spectra", 10.0,
       [] { return from_checks({v::spectrum_law(kSeed, 200, 5)}); }},
      {2, "output purity and minimal entropy equal for the conjugate", 60.0,
       [] { return from_checks({v::nu_conjugate_agreement(kSeed, 20)}); }},
      {3, "kraus, choi and ancilla conjugates related by partial isometries", 0.0,
       [] { return from_checks({v::conjugate_routes(kSeed, 50)}); }},
      {4, "qubit Pauli channel closed form on a 20x20 grid", 0.0,
       [] { return from_checks({v::qubit_closed_form(20)}); }},
      {5, "depolarizing multiplicativity and majorization bound", 0.0,
       [] { return from_checks({v::depolarizing_bounds()}); }},
      {6, "noisy-channel conjugate is a fixed unitary image of I (x) rho", 0.0,
       [] { return from_checks({v::noisy_conjugate_unitary(kSeed, 50)}); }},
      {7, "noisy-channel conjugate image properties on pure states", 0.0,
       [] {
         std::vector<Check> c;
         for (int d = 2; d <= 5; ++d) c.push_back(v::nc_properties_check(kSeed, d, 100));
         return from_checks(c);
       }},
      {8, "explicit noisy-channel conjugate formula", 0.0,
       [] { return from_checks({v::nc_explicit_check(kSeed, 50)}); }},
      {9, "two-norm bound for qutrit Pauli channels and its attaining axis state", 0.0,
       [] { return from_checks({v::nu2_bound_check(kSeed, 100)}); }},
      {10, "axes channel two-norm closed form at d = 3", 0.0,
       [] { return from_checks({v::axes_closed_form(kSeed, 20)}); }},
      {11, "linearisation identities and mixed-input failure of theta", 0.0,
       [] {
         Outcome o = from_checks({v::gl_identities(kSeed, 20)});
         qcc::Rng rng(qcc::derive_seed(kSeed, 11));
         const qcc::KrausChannel ch = qcc::random_channel(2, 2, 3, rng);
         const qcc::ThetaViolation tv = qcc::find_theta_violation(ch, 2, rng);
         char buf[96];
         std::snprintf(buf, sizeof buf, "; theta mixed-input deviation %.3e (needs > 1e-3)",
                       tv.deviation);
         o.detail += buf;
         o.pass = o.pass && tv.found && tv.deviation > 1e-3;
         return o;
       }},
      {12, "CQ / Hadamard / entanglement-breaking conjugacy and multiplicativity", 0.0,
       [] {
         return from_checks({v::cq_conjugate_hadamard(kSeed, 20),
                             v::hadamard_conjugate_ebt(kSeed, 20),
                             v::hadamard_multiplicativity(kSeed, 10)});
       }},
      {13, "full verification run is fast and deterministic", 0.0, run_verify_all_twice},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = seconds_since(t0);
    if (c.budget > 0.0) o = with_budget(o, secs, c.budget);
    if (!o.pass) ++failures;
    std::printf("%s criterion %2d: %s | %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
