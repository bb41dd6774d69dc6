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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "tubenull/digit_system.hpp"
#include "tubenull/entropy_types.hpp"
#include "tubenull/projection.hpp"

namespace tubenull {

using Complex = std::complex<double>;

inline constexpr int kDefaultFourierDepth = 40;
inline constexpr double kDefaultFourierThreshold = 1e-6;

/// Phi(xi) = sum_i p_i exp(-2 pi i <digit_i, xi>).
class TransferFactor {
 public:
  TransferFactor(const DigitSystem& system, ProbVector p);

  Complex operator()(std::span<const double> xi) const;
  const DigitSystem& system() const { return system_; }
  const ProbVector& weights() const { return p_; }
  /// E|i| = sum_i p_i |digit_i|_2.
  double mean_digit_norm() const;

 private:
  DigitSystem system_;
  ProbVector p_;
};

struct FourierValue {
  Complex value;
  double truncation_bound;  // 2 pi |xi| E|i| / (N^depth (N - 1))
};

/// mu_hat(xi) = prod_{k=1}^{depth} Phi(xi / N^k).
FourierValue mu_hat(const TransferFactor& phi, std::span<const double> xi, int depth);

struct InvarianceCheck {
  Direction v;
  int z;
  Complex at_z;        // mu_hat(z v)
  Complex at_Nz;       // mu_hat(N z v)
  double difference;   // |at_Nz - at_z|
  double truncation_bound;
};

InvarianceCheck check_scaling_invariance(const TransferFactor& phi, const Direction& v,
                                         int z, int depth = kDefaultFourierDepth);

struct ScanEntry {
  Direction v;
  int z;
  double modulus;
};

/// Entries (v, z) with 1 <= z <= z_max and |mu_hat(z v)| > threshold.
std::vector<ScanEntry> nonvanishing_scan(const TransferFactor& phi,
                                         std::span<const Direction> V, int z_max,
                                         int depth = kDefaultFourierDepth,
                                         double threshold = kDefaultFourierThreshold);

/// Same scan without the threshold filter (every (v, z) pair, in order).
std::vector<ScanEntry> modulus_table(const TransferFactor& phi,
                                     std::span<const Direction> V, int z_max,
                                     int depth = kDefaultFourierDepth);

}  // namespace tubenull
