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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tubenull/digit_system.hpp"

namespace tubenull {

/**
 * Symmetry of [0,1]^d: reflect the coordinates in `reflect`, then permute,
 * so A(x)_k = y_{perm[k]} with y_j = 1 - x_j when reflect[j] and x_j
 * otherwise. On a level-q cell index the reflection is c -> N^q - 1 - c.
 */
struct Isometry {
  std::vector<int> perm;
  std::vector<bool> reflect;

  static Isometry identity(int d);
  int dimension() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;

  /// Image of a level-q cell index (side = N^q cells per axis).
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& cell,
                                  std::int64_t side) const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Isometry operator*(const Isometry& a, const Isometry& b);
  friend bool operator==(const Isometry&, const Isometry&) = default;
  friend auto operator<=>(const Isometry&, const Isometry&) = default;
};

/// All 2^d d! symmetries of the cube, identity first.
std::vector<Isometry> cube_group(int d);

struct GdsEdge {
  int from = 0;
  int to = 0;
  Digit digit;
  Isometry isometry;
};

class GdsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// K_i = union over edges e from i of (A_e(K_to) + digit_e) / N.
class GraphDirectedSystem {
 public:
  /// Validates digits, isometries, vertex indices and strong connectivity.
  static GraphDirectedSystem create(int d, int N, int vertices, std::vector<GdsEdge> edges);

  /// A plain digit system as a one-vertex system with identity isometries.
  static GraphDirectedSystem from_digit_system(const DigitSystem& system);

  int dimension() const { return d_; }
  int base() const { return N_; }
  int vertices() const { return vertices_; }
  const std::vector<GdsEdge>& edges() const { return edges_; }

 private:
  friend GraphDirectedSystem symmetrize(const GraphDirectedSystem& g);

  GraphDirectedSystem(int d, int N, int vertices, std::vector<GdsEdge> edges)
      : d_(d), N_(N), vertices_(vertices), edges_(std::move(edges)) {}

  int d_;
  int N_;
  int vertices_;
  std::vector<GdsEdge> edges_;
};

/**
 * Vertices (i, A) for A in the cube group, in order i * |G| + index(A).
 * Edge e: i -> j becomes (i, A) -> (j, A A_e) with digit A(digit_e) and
 * identity isometry, so the new attractors are A(K_i) and their union is
 * invariant under x -> N x mod 1.
 *
 * The result is a disjoint union of strongly connected pieces, one per coset
 * of the subgroup generated by the edge isometries, so it is not itself
 * required to be strongly connected.
 */
GraphDirectedSystem symmetrize(const GraphDirectedSystem& g);

struct CellSet {
  int level = 0;
  std::vector<std::vector<std::int64_t>> cells;  // sorted

  friend bool operator==(const CellSet&, const CellSet&) = default;
};

class CellCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultCellCap = 1ULL << 26;

/// Level-q cells of the union of the symmetrized attractors, obtained as the
/// cube-group orbit of the original per-vertex cells.
CellSet occupied_cells(const GraphDirectedSystem& g, int q,
                       std::uint64_t cap = kDefaultCellCap);

/// Level-q cells per vertex of `g` by direct iteration of the edge cell map.
std::vector<CellSet> vertex_cells(const GraphDirectedSystem& g, int q,
                                  std::uint64_t cap = kDefaultCellCap);

/// Reference route: symmetrize explicitly, then take the union of vertex cells.
CellSet occupied_cells_explicit(const GraphDirectedSystem& g, int q,
                                std::uint64_t cap = kDefaultCellCap);

/// Cells of the level q-1 grid containing the given level-q cells.
CellSet coarsen(const CellSet& cells, int N);

/// Cells of T(cells) = N x mod 1 at level q-1: drop the leading base-N digit.
CellSet shift_cells(const CellSet& cells, int N);

class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Reduction {
  int q;
  DigitSystem system;
};

/// First q in [1, q_max] whose occupied cells miss part of the grid; the
/// digit system x -> (x + c) / N^q over those cells contains every K_i.
Reduction reduce_to_digit_system(const GraphDirectedSystem& g, int q_max,
                                 std::uint64_t cap = kDefaultCellCap);

}  // namespace tubenull
