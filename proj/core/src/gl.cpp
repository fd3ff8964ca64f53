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


#include "qcc/gl.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qcc/conjugate.hpp"
#include "qcc/error.hpp"

namespace qcc {

namespace {

int checked_power(int d, int p) {
  if (p < 1 || p > 4) {
    throw ValidationError("linearisation: p must be an integer in [1, 4]");
  }
  int total = 1;
  for (int i = 0; i < p; ++i) total *= d;
  if (total > 256) {
    throw DimensionError("linearisation: d^p = " + std::to_string(total) +
                         " exceeds 256");
  }
  return total;
}

Matrix tensor_power(const Matrix& m, int p) {
  Matrix out = m;
  for (int i = 1; i < p; ++i) out = kron(out, m);
  return out;
}

}  // namespace

Matrix shift_operator(int p, ShiftDirection direction, int d) {
  if (d < 1) throw DimensionError("shift_operator: d must be positive");
  const int n = checked_power(d, p);
  Matrix out = Matrix::Zero(n, n);
  std::vector<int> digits(p);
  for (int col = 0; col < n; ++col) {
    int rest = col;
    for (int i = p - 1; i >= 0; --i) {
      digits[i] = rest % d;
      rest /= d;
    }
    int row = 0;
    for (int i = 0; i < p; ++i) {
      const int src = direction == ShiftDirection::Left ? (i + 1) % p
                                                        : (i + p - 1) % p;
      row = row * d + digits[src];
    }
    out(row, col) = 1.0;
  }
  return out;
}

Matrix theta(const KrausChannel& channel, int p) {
  const int n_in = checked_power(channel.d_in(), p);
  checked_power(channel.d_out(), p);
  const int n = static_cast<int>(channel.size());
  std::vector<Matrix> pair(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      pair[a * n + b] = channel[a].adjoint() * channel[b];
    }
  }
  Matrix out = Matrix::Zero(n_in, n_in);
  std::vector<int> k(p, 0);
  while (true) {
    Matrix term = pair[k[0] * n + k[(1) % p]];
    for (int i = 1; i < p; ++i) term = kron(term, pair[k[i] * n + k[(i + 1) % p]]);
    out += term;
    int i = p - 1;
    while (i >= 0 && ++k[i] == n) k[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

Matrix omega(const KrausChannel& channel, int p) {
  checked_power(channel.d_in(), p);
  const Matrix shift = shift_operator(p, ShiftDirection::Left, channel.d_out());
  KrausChannel power = channel;
  for (int i = 1; i < p; ++i) power = tensor(power, channel);
  return adjoint_apply(power, shift);
}

GlResiduals verify_gl_identity(const KrausChannel& channel, int p) {
  const Matrix om = omega(channel, p);
  const Matrix th_c = theta(conjugate_kraus(channel), p);
  const Matrix th = theta(channel, p);
  const Matrix shift = shift_operator(p, ShiftDirection::Left, channel.d_in());
  GlResiduals out;
  out.res1 = (om - th_c.adjoint()).norm();
  out.res2 = (om - th * shift).norm();
  return out;
}

Complex linearised_value(const Matrix& rho, const Matrix& op, int p) {
  return (tensor_power(rho, p) * op).trace();
}

double output_power_trace(const KrausChannel& channel, const Matrix& rho,
                          int p) {
  const Matrix out = apply_channel(channel, rho);
  Matrix acc = out;
  for (int i = 1; i < p; ++i) acc = acc * out;
  return acc.trace().real();
}

ThetaViolation find_theta_violation(const KrausChannel& channel, int p,
                                    Rng& rng, double threshold,
                                    int max_tries) {
  const Matrix th = theta(channel, p);
  ThetaViolation out;
  for (int t = 0; t < max_tries; ++t) {
    const Matrix rho = random_density_matrix(channel.d_in(), rng);
    const double dev = std::abs(output_power_trace(channel, rho, p) -
                                linearised_value(rho, th, p));
    out.tries = t + 1;
    if (dev > out.deviation) {
      out.deviation = dev;
      out.rho = rho;
    }
    if (dev > threshold) {
      out.found = true;
      break;
    }
  }
  return out;
}

}  // namespace qcc
