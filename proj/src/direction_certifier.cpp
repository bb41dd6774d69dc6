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

#include "tubenull/direction_certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <omp.h>

#include "tubenull/random.hpp"

namespace tubenull {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Value, gradient and residue masses of one direction's entropy at p.
struct EntropyEval {
  double value = 0;
  Eigen::VectorXd grad;
  std::vector<double> mass;  // per residue
};

EntropyEval evaluate(const ProjectedAlphabet& a, const Eigen::VectorXd& p) {
  const double log_n = std::log(double(a.base));
  EntropyEval e;
  e.mass.assign(a.base, 0.0);
  for (Eigen::Index i = 0; i < p.size(); ++i) e.mass[a.residues[i]] += p[i];
  std::vector<double> dq(a.base, 0.0);
  for (int r = 0; r < a.base; ++r) {
    const double q = e.mass[r];
    if (q > 0) {
      e.value -= q * std::log(q);
      dq[r] = -(std::log(q) + 1.0) / log_n;
    }
  }
  e.value /= log_n;
  e.grad.resize(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) e.grad[i] = dq[a.residues[i]];
  return e;
}

double objective_at(std::span<const ProjectedAlphabet> alphabets,
                    const Eigen::VectorXd& p) {
  double g = kInf;
  for (const auto& a : alphabets) {
    g = std::min(g, entropy_N(residue_distribution(a, {p.data(), std::size_t(p.size())}),
                              a.base));
  }
  return g;
}

// Upper bound on max_q sum_v lambda_v h_v(q) over the simplex from the
// linearizations at p; valid for any lambda in the simplex by concavity.
double linearized_bound(const std::vector<EntropyEval>& evals,
                        const std::vector<double>& lambda,
                        const Eigen::VectorXd& p) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(p.size());
  double value = 0;
  for (std::size_t v = 0; v < evals.size(); ++v) {
    if (lambda[v] == 0) continue;
    g += lambda[v] * evals[v].grad;
    value += lambda[v] * evals[v].value;
  }
  return value + g.maxCoeff() - g.dot(p);
}

double certified_gap(std::span<const ProjectedAlphabet> alphabets,
                     const Eigen::VectorXd& p, double t, double s) {
  std::vector<EntropyEval> evals;
  for (const auto& a : alphabets) evals.push_back(evaluate(a, p));
  double g = kInf;
  for (const auto& e : evals) g = std::min(g, e.value);

  double best = kInf;
  // Barrier dual estimate lambda_v ~ 1 / (s (h_v - t)).
  if (s > 0) {
    std::vector<double> lambda;
    double total = 0;
    for (const auto& e : evals) {
      const double u = e.value - t;
      lambda.push_back(u > 0 ? 1.0 / u : 0.0);
      total += lambda.back();
    }
    if (total > 0 && std::isfinite(total)) {
      for (double& l : lambda) l /= total;
      best = std::min(best, linearized_bound(evals, lambda, p));
    }
  }
  // Multipliers of the near-active directions from the stationarity system
  // sum_v lambda_v grad h_v = c 1, sum_v lambda_v = 1, in least squares.
  for (double tol : {1e-3, 1e-5, 1e-7, 1e-9}) {
    std::vector<std::size_t> active;
    for (std::size_t v = 0; v < evals.size(); ++v) {
      if (evals[v].value - g <= tol) active.push_back(v);
    }
    const Eigen::Index k = static_cast<Eigen::Index>(active.size());
    const Eigen::Index m = p.size();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m + 1, k + 1);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
    for (Eigen::Index j = 0; j < k; ++j) {
      A.block(0, j, m, 1) = evals[active[j]].grad;
      A(m, j) = 1.0;
    }
    A.block(0, k, m, 1).setConstant(-1.0);
    b[m] = 1.0;
    const Eigen::VectorXd sol = A.completeOrthogonalDecomposition().solve(b);
    std::vector<double> lambda(evals.size(), 0.0);
    double total = 0;
    for (Eigen::Index j = 0; j < k; ++j) {
      lambda[active[j]] = std::max(0.0, sol[j]);
      total += lambda[active[j]];
    }
    if (total > 0 && std::isfinite(total)) {
      for (double& l : lambda) l /= total;
      best = std::min(best, linearized_bound(evals, lambda, p));
    }
  }
  // Pure weights on single directions.
  for (std::size_t v = 0; v < evals.size(); ++v) {
    std::vector<double> lambda(evals.size(), 0.0);
    lambda[v] = 1.0;
    best = std::min(best, linearized_bound(evals, lambda, p));
  }
  return std::max(0.0, best - g);
}

struct BarrierState {
  Eigen::VectorXd p;
  double t;
};

// phi_s(p, t) = -s t - sum_v log(h_v(p) - t) - sum_j log p_j.
double barrier_value(std::span<const ProjectedAlphabet> alphabets,
                     const Eigen::VectorXd& p, double t, double s) {
  if ((p.array() <= 0).any()) return kInf;
  double phi = -s * t;
  for (const auto& a : alphabets) {
    const double u =
        entropy_N(residue_distribution(a, {p.data(), std::size_t(p.size())}), a.base) - t;
    if (!(u > 0)) return kInf;
    phi -= std::log(u);
  }
  phi -= p.array().log().sum();
  return phi;
}

// Newton centering for fixed s with the equality constraint sum p = 1.
void center(std::span<const ProjectedAlphabet> alphabets, BarrierState& x,
            double s, int max_iters) {
  const Eigen::Index m = x.p.size();
  const Eigen::Index n = m + 1;
  for (int iter = 0; iter < max_iters; ++iter) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(n);
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(n, n);
    grad[m] = -s;
    for (const auto& a : alphabets) {
      EntropyEval e = evaluate(a, x.p);
      const double u = e.value - x.t;
      Eigen::VectorXd da(n);
      da.head(m) = e.grad;
      da[m] = -1.0;
      grad -= da / u;
      hess += da * da.transpose() / (u * u);
      // -Hess(h_v) / u: block constant on each residue class.
      const double log_n = std::log(double(a.base));
      for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
          if (a.residues[i] == a.residues[j]) {
            hess(i, j) += 1.0 / (e.mass[a.residues[i]] * log_n * u);
          }
        }
      }
    }
    grad.head(m) -= x.p.cwiseInverse();
    hess.diagonal().head(m) += x.p.cwiseInverse().cwiseAbs2();

    // Newton step in the sum-zero subspace: p_last = 1 - sum of the others.
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(n, n - 1);
    for (Eigen::Index i = 0; i + 1 < m; ++i) {
      Z(i, i) = 1.0;
      Z(m - 1, i) = -1.0;
    }
    Z(m, n - 2) = 1.0;
    const Eigen::MatrixXd reduced = Z.transpose() * hess * Z;
    const Eigen::VectorXd reduced_grad = Z.transpose() * grad;
    const Eigen::VectorXd dy = reduced.ldlt().solve(-reduced_grad);
    const Eigen::VectorXd step = Z * dy;

    const double decrement = dy.dot(reduced * dy);
    if (!(decrement > 1e-14) || !std::isfinite(decrement)) break;

    const double phi0 = barrier_value(alphabets, x.p, x.t, s);
    double tau = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls, tau *= 0.5) {
      Eigen::VectorXd p = x.p + tau * step.head(m);
      const double t = x.t + tau * step[m];
      const double phi = barrier_value(alphabets, p, t, s);
      if (phi <= phi0 - 0.25 * tau * decrement) {
        x.p = p;
        x.t = t;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    if (decrement / 2 < 1e-12) break;
  }
}

}  // namespace

std::vector<ProjectedAlphabet> project_all(const DigitSystem& system,
                                           std::span<const Direction> V) {
  std::vector<ProjectedAlphabet> out;
  for (const auto& v : V) out.push_back(project_alphabet(system, v));
  return out;
}

double objective(std::span<const ProjectedAlphabet> alphabets,
                 std::span<const double> p) {
  if (alphabets.empty()) throw std::invalid_argument("direction set is empty");
  double g = kInf;
  for (const auto& a : alphabets) {
    g = std::min(g, entropy_N(residue_distribution(a, p), a.base));
  }
  return g;
}

double objective(const DigitSystem& system, std::span<const Direction> V,
                 std::span<const double> p) {
  return objective(project_all(system, V), p);
}

DirectionCertificate maximize_objective(const DigitSystem& system,
                                        std::vector<Direction> V,
                                        const CertifierConfig& config) {
  if (V.empty()) throw std::invalid_argument("direction set is empty");
  const auto alphabets = project_all(system, V);
  const Eigen::Index m = static_cast<Eigen::Index>(system.size());

  DirectionCertificate cert;
  cert.V = std::move(V);

  Eigen::VectorXd best_p = Eigen::VectorXd::Constant(m, 1.0 / double(m));
  double best_g = objective_at(alphabets, best_p);
  double best_gap = certified_gap(alphabets, best_p, best_g - 1.0, 0.0);

  if (m > 1) {
    BarrierState x{best_p, best_g - 1.0};
    const double constraints = double(alphabets.size() + m);
    double s = constraints;
    while (true) {
      center(alphabets, x, s, config.max_iters);
      const double g = objective_at(alphabets, x.p);
      const double gap = certified_gap(alphabets, x.p, x.t, s);
      // Late stages lose the dual estimate to cancellation in h_v - t, so keep
      // the stage with the smallest certified upper bound g + gap.
      if (g + gap <= best_g + best_gap + 1e-13) {
        best_p = x.p;
        best_g = g;
        best_gap = gap;
      }
      if (constraints / s < config.target_gap && best_gap < config.target_gap) break;
      if (constraints / s < 1e-14) break;
      s *= 8.0;
    }
  }

  cert.witness.assign(best_p.data(), best_p.data() + m);
  cert.delta_star = std::clamp(1.0 - best_g, 0.0, 1.0);
  cert.gap = best_gap;
  cert.certified = cert.delta_star > config.gap_tol && cert.gap <= config.gap_tol;
  return cert;
}

DirectionCertificate delta_star(const DigitSystem& system,
                                std::vector<Direction> V,
                                const CertifierConfig& config) {
  DirectionCertificate cert = maximize_objective(system, std::move(V), config);
  cert.oracle_resolution = config.oracle_resolution;
  cert.oracle = grid_oracle(system, cert.V, config.oracle_resolution,
                            config.oracle_cap, config.oracle_seed);
  return cert;
}

namespace {

// Visits compositions of `total` into counts[from..m-1], with the earlier
// slots already filled.
template <typename Visit>
void compositions_from(std::vector<std::int64_t>& counts, std::size_t from,
                       std::int64_t total, Visit&& visit) {
  if (from + 1 == counts.size()) {
    counts[from] = total;
    visit(counts);
    return;
  }
  for (std::int64_t c = total; c >= 0; --c) {
    counts[from] = c;
    compositions_from(counts, from + 1, total - c, visit);
  }
}

double g_of_counts(std::span<const ProjectedAlphabet> alphabets,
                   std::span<const std::int64_t> counts,
                   std::vector<std::int64_t>& scratch) {
  double g = kInf;
  for (const auto& a : alphabets) {
    scratch.assign(a.base, 0);
    for (std::size_t i = 0; i < counts.size(); ++i) scratch[a.residues[i]] += counts[i];
    g = std::min(g, entropy_N(std::span<const std::int64_t>(scratch), a.base));
  }
  return g;
}

}  // namespace

double grid_oracle(const DigitSystem& system, std::span<const Direction> V,
                   int resolution, std::uint64_t cap, std::uint64_t seed) {
  if (resolution < 1) throw std::invalid_argument("oracle resolution must be >= 1");
  const auto alphabets = project_all(system, V);
  const int m = static_cast<int>(system.size());
  const std::uint64_t points = type_count(resolution, m);
  double best = -kInf;

  if (m == 1) {
    std::vector<std::int64_t> scratch;
    const std::vector<std::int64_t> counts{resolution};
    return g_of_counts(alphabets, counts, scratch);
  }

  if (points <= cap) {
#pragma omp parallel reduction(max : best)
    {
      std::vector<std::int64_t> counts(m, 0);
      std::vector<std::int64_t> scratch;
#pragma omp for schedule(dynamic, 1)
      for (int first = 0; first <= resolution; ++first) {
        counts[0] = first;
        compositions_from(counts, 1, resolution - first,
                          [&](const std::vector<std::int64_t>& c) {
                            best = std::max(best, g_of_counts(alphabets, c, scratch));
                          });
      }
    }
    return best;
  }

  // Uniform random compositions via stars and bars.
  const int slots = resolution + m - 1;
#pragma omp parallel reduction(max : best)
  {
    std::vector<std::int64_t> counts(m);
    std::vector<std::int64_t> scratch;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cap); ++i) {
      CounterRng rng(seed, static_cast<std::uint64_t>(i));
      std::fill(counts.begin(), counts.end(), 0);
      int bars_needed = m - 1;
      int part = 0;
      for (int slot = 0; slot < slots; ++slot) {
        const int remaining = slots - slot;
        if (bars_needed > 0 &&
            rng.below(static_cast<std::uint64_t>(remaining)) <
                static_cast<std::uint64_t>(bars_needed)) {
          --bars_needed;
          ++part;
        } else {
          ++counts[part];
        }
      }
      best = std::max(best, g_of_counts(alphabets, counts, scratch));
    }
  }
  return best;
}

double grid_oracle_serial(const DigitSystem& system,
                          std::span<const Direction> V, int resolution) {
  const auto alphabets = project_all(system, V);
  double best = -kInf;
  std::vector<std::int64_t> scratch;
  for_each_type(resolution, static_cast<int>(system.size()),
                [&](std::span<const std::int64_t> counts) {
                  best = std::max(best, g_of_counts(alphabets, counts, scratch));
                },
                std::numeric_limits<std::uint64_t>::max());
  return best;
}

std::vector<Direction> axis_and_diagonal_directions(int d) {
  std::vector<Direction> out;
  for (int i = 0; i < d; ++i) {
    std::vector<int> v(d, 0);
    v[i] = 1;
    out.push_back(Direction::create(v));
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      std::vector<int> v(d, 0);
      v[i] = 1;
      v[j] = 1;
      out.push_back(Direction::create(v));
      v[j] = -1;
      out.push_back(Direction::create(v));
    }
  }
  return out;
}

std::vector<Direction> primitive_directions_of_radius(int d, int R) {
  std::vector<Direction> out;
  std::vector<int> v(d, -R);
  while (true) {
    int max_abs = 0;
    int g = 0;
    for (int c : v) {
      max_abs = std::max(max_abs, std::abs(c));
      g = std::gcd(g, c);
    }
    auto first = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
    if (max_abs == R && g == 1 && *first > 0) out.push_back(Direction::create(v));
    int k = d - 1;
    while (k >= 0 && v[k] == R) v[k--] = -R;
    if (k < 0) break;
    ++v[k];
  }
  std::stable_sort(out.begin(), out.end(), [](const Direction& a, const Direction& b) {
    if (a.l1_norm() != b.l1_norm()) return a.l1_norm() < b.l1_norm();
    return a.components() > b.components();
  });
  return out;
}

DirectionCertificate direction_search(const DigitSystem& system, int R_max,
                                      const CertifierConfig& config) {
  if (R_max < 1) throw std::invalid_argument("R_max must be at least 1");
  const int d = system.dimension();
  std::vector<Direction> pool = axis_and_diagonal_directions(d);
  int radius = 0;
  auto extend_pool = [&] {
    ++radius;
    for (auto& v : primitive_directions_of_radius(d, radius)) {
      if (std::find(pool.begin(), pool.end(), v) == pool.end()) pool.push_back(v);
    }
  };

  std::vector<Direction> chosen;
  ProbVector witness = uniform_prob(system.size());
  double current = kInf;
  DirectionCertificate cert;

  while (true) {
    int pick = -1;
    double pick_value = kInf;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (std::find(chosen.begin(), chosen.end(), pool[i]) != chosen.end()) continue;
      const double h = entropy_N(
          residue_distribution(project_alphabet(system, pool[i]), witness),
          system.base());
      if (h < pick_value - 1e-12) {
        pick = static_cast<int>(i);
        pick_value = h;
      }
    }
    // Nothing in the pool lowers g at the current maximizer: widen it.
    if (pick < 0 || pick_value >= current - 1e-12) {
      if (radius >= R_max) break;
      extend_pool();
      continue;
    }
    chosen.push_back(pool[pick]);
    cert = maximize_objective(system, chosen, config);
    witness = cert.witness;
    current = 1.0 - cert.delta_star;
    if (cert.certified) break;
  }

  if (chosen.empty()) {
    // Every candidate ties at the uniform point; fall back to the first one.
    chosen.push_back(pool.front());
    cert = maximize_objective(system, chosen, config);
  }
  cert.oracle_resolution = config.oracle_resolution;
  cert.oracle = grid_oracle(system, cert.V, config.oracle_resolution,
                            config.oracle_cap, config.oracle_seed);
  return cert;
}

}  // namespace tubenull
