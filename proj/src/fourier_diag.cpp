// Copyright 2026 The Tubenull Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tubenull/fourier_diag.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tubenull {

TransferFactor::TransferFactor(const DigitSystem& system, ProbVector p)
    : system_(system), p_(std::move(p)) {
  if (p_.size() != system_.size()) {
    throw std::invalid_argument("weights do not match the digit count");
  }
  validate_prob_vector(p_);
}

Complex TransferFactor::operator()(std::span<const double> xi) const {
  Complex sum = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] == 0) continue;
    double phase = 0;
    for (std::size_t k = 0; k < xi.size(); ++k) phase += system_.digit(i)[k] * xi[k];
    // Reduce mod 1 first so large integer frequencies give exactly 1.
    phase -= std::floor(phase);
    sum += p_[i] * std::polar(1.0, -2 * std::numbers::pi * phase);
  }
  return sum;
}

double TransferFactor::mean_digit_norm() const {
  double e = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    double sq = 0;
    for (int x : system_.digit(i)) sq += double(x) * x;
    e += p_[i] * std::sqrt(sq);
  }
  return e;
}

FourierValue mu_hat(const TransferFactor& phi, std::span<const double> xi, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (xi.size() != static_cast<std::size_t>(phi.system().dimension())) {
    throw std::invalid_argument("frequency has the wrong dimension");
  }
  const double N = phi.system().base();
  std::vector<double> scaled(xi.begin(), xi.end());
  Complex product = 1;
  for (int k = 1; k <= depth; ++k) {
    for (auto& x : scaled) x /= N;
    product *= phi(scaled);
  }
  double norm = 0;
  for (double x : xi) norm += x * x;
  const double tail = 2 * std::numbers::pi * std::sqrt(norm) * phi.mean_digit_norm() /
                      (std::pow(N, depth) * (N - 1));
  return {product, tail};
}

InvarianceCheck check_scaling_invariance(const TransferFactor& phi, const Direction& v,
                                         int z, int depth) {
  if (z == 0) throw std::invalid_argument("z must be nonzero");
  const int N = phi.system().base();
  std::vector<double> zv, nzv;
  for (int x : v.components()) {
    zv.push_back(double(z) * x);
    nzv.push_back(double(N) * z * x);
  }
  const auto a = mu_hat(phi, zv, depth);
  const auto b = mu_hat(phi, nzv, depth);
  return {v, z, a.value, b.value, std::abs(b.value - a.value),
          a.truncation_bound + b.truncation_bound};
}

std::vector<ScanEntry> modulus_table(const TransferFactor& phi,
                                     std::span<const Direction> V, int z_max, int depth) {
  if (z_max < 1) throw std::invalid_argument("z_max must be at least 1");
  const int count = static_cast<int>(V.size()) * z_max;
  std::vector<double> moduli(count);
#pragma omp parallel for schedule(static)
  for (int t = 0; t < count; ++t) {
    const auto& v = V[t / z_max];
    const int z = t % z_max + 1;
    std::vector<double> xi;
    for (int x : v.components()) xi.push_back(double(z) * x);
    moduli[t] = std::abs(mu_hat(phi, xi, depth).value);
  }
  std::vector<ScanEntry> out;
  for (int t = 0; t < count; ++t) out.push_back({V[t / z_max], t % z_max + 1, moduli[t]});
  return out;
}

std::vector<ScanEntry> nonvanishing_scan(const TransferFactor& phi,
                                         std::span<const Direction> V, int z_max, int depth,
                                         double threshold) {
  std::vector<ScanEntry> out;
  for (auto& e : modulus_table(phi, V, z_max, depth)) {
    if (e.modulus > threshold) out.push_back(e);
  }
  return out;
}

}  // namespace tubenull
