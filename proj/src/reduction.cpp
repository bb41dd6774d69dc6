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

#include "tubenull/reduction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace tubenull {

Isometry Isometry::identity(int d) {
  Isometry a;
  a.perm.resize(d);
  std::iota(a.perm.begin(), a.perm.end(), 0);
  a.reflect.assign(d, false);
  return a;
}

bool Isometry::is_identity() const { return *this == identity(dimension()); }

std::vector<std::int64_t> Isometry::apply(const std::vector<std::int64_t>& cell,
                                          std::int64_t side) const {
  const int d = dimension();
  std::vector<std::int64_t> out(d);
  for (int k = 0; k < d; ++k) {
    const int j = perm[k];
    out[k] = reflect[j] ? side - 1 - cell[j] : cell[j];
  }
  return out;
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  // a(b(x))_k = [a reflects perm_a[k]] applied to b(x)_{perm_a[k]}
  //           = y_{perm_b[perm_a[k]]} with reflection parity combined.
  const int d = a.dimension();
  Isometry c;
  c.perm.resize(d);
  c.reflect.assign(d, false);
  for (int k = 0; k < d; ++k) {
    const int j = a.perm[k];
    const int i = b.perm[j];
    c.perm[k] = i;
    c.reflect[i] = a.reflect[j] != b.reflect[i];
  }
  return c;
}

std::vector<Isometry> cube_group(int d) {
  std::vector<Isometry> group;
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      Isometry a{perm, std::vector<bool>(d)};
      for (int k = 0; k < d; ++k) a.reflect[k] = (mask >> k) & 1;
      group.push_back(std::move(a));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return group;
}

namespace {

bool reaches_all(int vertices, const std::vector<GdsEdge>& edges, bool reverse) {
  std::vector<bool> seen(vertices, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      const int a = reverse ? e.to : e.from;
      const int b = reverse ? e.from : e.to;
      if (a == u && !seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

void validate_isometry(const Isometry& a, int d) {
  if (a.dimension() != d || static_cast<int>(a.reflect.size()) != d) {
    throw GdsError("isometry has the wrong dimension");
  }
  std::vector<int> sorted = a.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < d; ++k) {
    if (sorted[k] != k) throw GdsError("isometry permutation is not a permutation");
  }
}

// Bitmap over the N^(qd) cells of level q with linear codes.
class CellBitmap {
 public:
  CellBitmap(int d, std::int64_t side, std::uint64_t cap) : d_(d), side_(side) {
    std::uint64_t total = 1;
    for (int k = 0; k < d; ++k) {
      if (total > cap / static_cast<std::uint64_t>(side)) {
        throw CellCapExceeded("cell grid exceeds the cap");
      }
      total *= static_cast<std::uint64_t>(side);
    }
    bits_.assign(total, 0);
  }
  std::uint64_t code(const std::vector<std::int64_t>& cell) const {
    std::uint64_t c = 0;
    for (int k = d_ - 1; k >= 0; --k) c = c * side_ + cell[k];
    return c;
  }
  std::vector<std::int64_t> cell(std::uint64_t code) const {
    std::vector<std::int64_t> c(d_);
    for (int k = 0; k < d_; ++k) {
      c[k] = static_cast<std::int64_t>(code % side_);
      code /= side_;
    }
    return c;
  }
  void insert(const std::vector<std::int64_t>& cell) { bits_[code(cell)] = 1; }
  std::uint64_t grid_size() const { return bits_.size(); }

  CellSet to_set(int level) const {
    CellSet out{level, {}};
    for (std::uint64_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.cells.push_back(cell(i));
    }
    std::sort(out.cells.begin(), out.cells.end());
    return out;
  }

 private:
  int d_;
  std::uint64_t side_;
  std::vector<char> bits_;
};

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

GraphDirectedSystem GraphDirectedSystem::create(int d, int N, int vertices,
                                                std::vector<GdsEdge> edges) {
  if (d < 1) throw GdsError("dimension must be at least 1");
  if (N < 2) throw GdsError("base must be at least 2");
  if (vertices < 1) throw GdsError("need at least one vertex");
  if (edges.empty()) throw GdsError("no edges");
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= vertices || e.to < 0 || e.to >= vertices) {
      throw GdsError("edge vertex out of range");
    }
    if (static_cast<int>(e.digit.size()) != d) throw GdsError("edge digit has the wrong arity");
    for (int x : e.digit) {
      if (x < 0 || x >= N) throw GdsError("edge digit outside {0,...,N-1}^d");
    }
    validate_isometry(e.isometry, d);
  }
  if (!reaches_all(vertices, edges, false) || !reaches_all(vertices, edges, true)) {
    throw GdsError("graph is not strongly connected");
  }
  return GraphDirectedSystem(d, N, vertices, std::move(edges));
}

GraphDirectedSystem GraphDirectedSystem::from_digit_system(const DigitSystem& system) {
  std::vector<GdsEdge> edges;
  for (const auto& digit : system.digits()) {
    edges.push_back({0, 0, digit, Isometry::identity(system.dimension())});
  }
  return create(system.dimension(), system.base(), 1, std::move(edges));
}

GraphDirectedSystem symmetrize(const GraphDirectedSystem& g) {
  const int d = g.dimension();
  const auto group = cube_group(d);
  const int order = static_cast<int>(group.size());
  auto index_of = [&](const Isometry& a) {
    return static_cast<int>(std::find(group.begin(), group.end(), a) - group.begin());
  };
  std::vector<GdsEdge> edges;
  for (int a = 0; a < order; ++a) {
    for (const auto& e : g.edges()) {
      const std::vector<std::int64_t> digit(e.digit.begin(), e.digit.end());
      const auto moved = group[a].apply(digit, g.base());
      edges.push_back({e.from * order + a, e.to * order + index_of(group[a] * e.isometry),
                       Digit(moved.begin(), moved.end()), Isometry::identity(d)});
    }
  }
  return GraphDirectedSystem(d, g.base(), g.vertices() * order, std::move(edges));
}

std::vector<CellSet> vertex_cells(const GraphDirectedSystem& g, int q, std::uint64_t cap) {
  if (q < 0) throw std::invalid_argument("level must be non-negative");
  const int d = g.dimension();
  const std::vector<std::int64_t> origin(d, 0);
  std::vector<CellSet> current(g.vertices(), CellSet{0, {origin}});
  for (int level = 1; level <= q; ++level) {
    const std::int64_t inner = ipow(g.base(), level - 1);
    std::vector<CellBitmap> next;
    for (int i = 0; i < g.vertices(); ++i) next.emplace_back(d, inner * g.base(), cap);
    for (const auto& e : g.edges()) {
      for (const auto& c : current[e.to].cells) {
        auto image = e.isometry.apply(c, inner);
        for (int k = 0; k < d; ++k) image[k] += e.digit[k] * inner;
        next[e.from].insert(image);
      }
    }
    for (int i = 0; i < g.vertices(); ++i) current[i] = next[i].to_set(level);
  }
  return current;
}

CellSet occupied_cells(const GraphDirectedSystem& g, int q, std::uint64_t cap) {
  if (q < 1) throw std::invalid_argument("level must be at least 1");
  const auto per_vertex = vertex_cells(g, q, cap);
  const std::int64_t side = ipow(g.base(), q);
  CellBitmap all(g.dimension(), side, cap);
  for (const auto& a : cube_group(g.dimension())) {
    for (const auto& cells : per_vertex) {
      for (const auto& c : cells.cells) all.insert(a.apply(c, side));
    }
  }
  return all.to_set(q);
}

CellSet occupied_cells_explicit(const GraphDirectedSystem& g, int q, std::uint64_t cap) {
  if (q < 1) throw std::invalid_argument("level must be at least 1");
  const auto per_vertex = vertex_cells(symmetrize(g), q, cap);
  CellBitmap all(g.dimension(), ipow(g.base(), q), cap);
  for (const auto& cells : per_vertex) {
    for (const auto& c : cells.cells) all.insert(c);
  }
  return all.to_set(q);
}

CellSet coarsen(const CellSet& cells, int N) {
  CellSet out{cells.level - 1, {}};
  for (auto c : cells.cells) {
    for (auto& x : c) x /= N;
    out.cells.push_back(std::move(c));
  }
  std::sort(out.cells.begin(), out.cells.end());
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()), out.cells.end());
  return out;
}

CellSet shift_cells(const CellSet& cells, int N) {
  const std::int64_t side = ipow(N, cells.level - 1);
  CellSet out{cells.level - 1, {}};
  for (auto c : cells.cells) {
    for (auto& x : c) x %= side;
    out.cells.push_back(std::move(c));
  }
  std::sort(out.cells.begin(), out.cells.end());
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()), out.cells.end());
  return out;
}

Reduction reduce_to_digit_system(const GraphDirectedSystem& g, int q_max, std::uint64_t cap) {
  if (q_max < 1) throw std::invalid_argument("q_max must be at least 1");
  for (int q = 1; q <= q_max; ++q) {
    const CellSet cells = occupied_cells(g, q, cap);
    std::uint64_t grid = 1;
    for (int k = 0; k < g.dimension(); ++k) grid *= static_cast<std::uint64_t>(ipow(g.base(), q));
    if (cells.cells.size() < grid) {
      std::vector<Digit> digits;
      for (const auto& c : cells.cells) digits.emplace_back(c.begin(), c.end());
      const std::int64_t base = ipow(g.base(), q);
      if (base > std::numeric_limits<int>::max()) throw CellCapExceeded("reduced base overflows");
      return {q, DigitSystem::create(g.dimension(), static_cast<int>(base), std::move(digits))};
    }
  }
  throw Inconclusive("inconclusive: every cell is occupied up to q = " + std::to_string(q_max));
}

}  // namespace tubenull
