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

#include "tubenull/svg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tubenull {
namespace {

double to_double(const BigInt& x) { return static_cast<double>(x); }

}  // namespace

std::string render_svg(const CoverCertificate& cover, const RenderSpec& spec) {
  if (cover.system.dimension() != 2) throw std::invalid_argument("SVG output is planar only");
  if (cover.mode != CoverMode::kExact) {
    throw std::invalid_argument("SVG output needs an exact-mode cover");
  }
  if (spec.canvas < 64) throw std::invalid_argument("canvas must be at least 64 px");
  const double margin = spec.canvas * 0.05;
  const double side = spec.canvas - 2 * margin;
  const int N = cover.system.base();
  const int n = cover.level;
  const double scale = std::pow(double(N), n);

  std::ostringstream out;
  out.precision(10);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.canvas
      << "\" height=\"" << spec.canvas << "\" viewBox=\"0 0 " << spec.canvas << " "
      << spec.canvas << "\">\n";
  out << "<defs><clipPath id=\"unit\"><rect x=\"0\" y=\"0\" width=\"1\" height=\"1\"/>"
      << "</clipPath></defs>\n";
  out << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << spec.canvas << "\" height=\""
      << spec.canvas << "\" fill=\"white\"/>\n";
  // Unit-square coordinates with y pointing up.
  out << "<g transform=\"translate(" << margin << "," << margin + side << ") scale(" << side
      << "," << -side << ")\">\n";

  if (spec.show_cylinders) {
    out << "<g class=\"cylinders\" fill=\"#444444\" fill-opacity=\"0.6\">\n";
    const std::size_t m = cover.system.size();
    std::vector<int> symbols(n, 0);
    while (true) {
      double x = 0, y = 0;
      for (int s : symbols) {
        x = x * N + cover.system.digit(s)[0];
        y = y * N + cover.system.digit(s)[1];
      }
      out << "<rect class=\"cyl\" x=\"" << x / scale << "\" y=\"" << y / scale
          << "\" width=\"" << 1 / scale << "\" height=\"" << 1 / scale << "\"/>\n";
      int j = n - 1;
      while (j >= 0 && symbols[j] == static_cast<int>(m) - 1) symbols[j--] = 0;
      if (j < 0) break;
      ++symbols[j];
    }
    out << "</g>\n";
  }

  out << "<g clip-path=\"url(#unit)\">\n";
  for (std::size_t vi = 0; vi < cover.per_direction.size(); ++vi) {
    const auto& dc = cover.per_direction[vi];
    const auto& v = dc.direction;
    const double norm = v.l2_norm();
    const double angle = std::atan2(double(v[1]), double(v[0])) * 180 / std::numbers::pi;
    std::int64_t lo_off = 0, hi_off = 0;
    for (int c : v.components()) (c < 0 ? lo_off : hi_off) += c;
    const auto& color = spec.colors[vi % spec.colors.size()];
    out << "<g fill=\"" << color << "\" fill-opacity=\"" << spec.slab_opacity << "\">\n";
    for (const auto& q : dc.positions) {
      const double lo = (to_double(q) + lo_off) / scale / norm;
      const double hi = (to_double(q) + hi_off) / scale / norm;
      out << "<rect class=\"slab\" data-direction=\"" << v.key() << "\" x=\"" << lo
          << "\" y=\"-2\" width=\"" << hi - lo << "\" height=\"4\" transform=\"rotate(" << angle
          << ")\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n";
  out << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" "
      << "stroke=\"black\" stroke-width=\"" << spec.stroke
      << "\" vector-effect=\"non-scaling-stroke\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace tubenull
