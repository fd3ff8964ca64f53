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


#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qcc/channel.hpp"
#include "qcc/numkit.hpp"
#include "qcc/random.hpp"

namespace qcc_test {

using namespace qcc;

// Generators. Every property test draws its cases from a fixed seed so a
// failure names a reproducible case index.

struct ChannelCase {
  int d_in = 2;
  int d_out = 2;
  int n_kraus = 1;
};

inline int draw_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(hi - lo + 1)));
}

inline ChannelCase draw_case(Rng& rng, int lo = 1, int hi = 4, int max_kraus = 6) {
  ChannelCase c;
  c.d_in = draw_int(rng, lo, hi);
  c.d_out = draw_int(rng, lo, hi);
  const int min_kraus = (c.d_in + c.d_out - 1) / c.d_out;
  c.n_kraus = draw_int(rng, min_kraus, std::max(min_kraus, max_kraus));
  return c;
}

inline KrausChannel draw_channel(Rng& rng, int lo = 1, int hi = 4, int max_kraus = 6) {
  const ChannelCase c = draw_case(rng, lo, hi, max_kraus);
  return random_channel(c.d_in, c.d_out, c.n_kraus, rng);
}

// Runs body(case_index, rng) for n cases with per-case seeds.
inline void for_cases(std::uint64_t seed, int n,
                      const std::function<void(int, Rng&)>& body) {
  for (int i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    body(i, rng);
  }
}

// Oracles built straight from definitions, sharing no code with the library.

inline Complex root_of_unity(int d, int k) {
  const double angle = 2.0 * M_PI * k / d;
  return {std::cos(angle), std::sin(angle)};
}

// X|j> = |j+1 mod d>.
inline Matrix shift_x(int d) {
  Matrix x = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

// Z|j> = w^j |j>.
inline Matrix clock_z(int d) {
  Matrix z = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = root_of_unity(d, j);
  return z;
}

inline Matrix mat_pow(const Matrix& m, int k) {
  Matrix r = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

// X^j Z^k at index d*j + k.
inline std::vector<Matrix> weyl_operators(int d) {
  std::vector<Matrix> out;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      out.push_back(mat_pow(shift_x(d), j) * mat_pow(clock_z(d), k));
    }
  }
  return out;
}

inline Matrix apply_kraus(const std::vector<Matrix>& kraus, const Matrix& rho) {
  Matrix out = Matrix::Zero(kraus[0].rows(), kraus[0].rows());
  for (const auto& f : kraus) out += f * rho * f.adjoint();
  return out;
}

// Gamma = (1/d_in) sum_jk |j><k| (x) Phi(|j><k|), index j*d_out + m.
inline Matrix choi_oracle(const std::vector<Matrix>& kraus) {
  const int d_in = static_cast<int>(kraus[0].cols());
  const int d_out = static_cast<int>(kraus[0].rows());
  Matrix gamma = Matrix::Zero(d_in * d_out, d_in * d_out);
  for (int j = 0; j < d_in; ++j) {
    for (int k = 0; k < d_in; ++k) {
      Matrix e = Matrix::Zero(d_in, d_in);
      e(j, k) = 1.0;
      gamma.block(j * d_out, k * d_out, d_out, d_out) = apply_kraus(kraus, e);
    }
  }
  return gamma / static_cast<double>(d_in);
}

inline Matrix partial_trace_oracle(const Matrix& m, int da, int db, bool keep_a) {
  Matrix out = Matrix::Zero(keep_a ? da : db, keep_a ? da : db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          const Complex v = m(i * db + k, j * db + l);
          if (keep_a && k == l) out(i, j) += v;
          if (!keep_a && i == j) out(k, l) += v;
        }
      }
    }
  }
  return out;
}

inline std::vector<Matrix> amplitude_damping(double gamma) {
  Matrix k0 = Matrix::Zero(2, 2);
  Matrix k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return {k0, k1};
}

// Binary entropy in bits.
inline double h2(double x) {
  double h = 0.0;
  for (double p : {x, 1.0 - x}) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

inline double max_entry(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qcc_test
