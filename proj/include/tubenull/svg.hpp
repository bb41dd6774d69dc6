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

#include <string>
#include <vector>

#include "tubenull/cover_builder.hpp"

namespace tubenull {

/// Shape elements present in every rendering: background, clip rectangle, frame.
inline constexpr int kSvgChrome = 3;

struct RenderSpec {
  int canvas = 512;  // pixels, at least 64
  bool show_cylinders = true;
  std::vector<std::string> colors = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  double stroke = 1.0;
  double slab_opacity = 0.25;
};

/// SVG 1.1 drawing of a planar exact-mode cover: unit square, level-n
/// cylinders (class "cyl") and one rotated rectangle per slab (class "slab").
std::string render_svg(const CoverCertificate& cover, const RenderSpec& spec = {});

}  // namespace tubenull
