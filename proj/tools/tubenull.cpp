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

// Command-line front end: certify, cover, verify, reduce, fourier.
//
// Exit codes: 0 success, 1 semantic failure, 2 input error, 3 resource cap.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tubenull/cover_builder.hpp"
#include "tubenull/direction_certifier.hpp"
#include "tubenull/fourier_diag.hpp"
#include "tubenull/reduction.hpp"
#include "tubenull/serialization.hpp"
#include "tubenull/svg.hpp"
#include "tubenull/verifier.hpp"

namespace {

using namespace tubenull;

enum Exit { kOk = 0, kFailure = 1, kInput = 2, kCap = 3 };

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file_atomic(out, text);
  }
}

struct CertifyArgs {
  std::string system;
  std::string directions;
  int rmax = 1;
  std::string out;
};

int certify(const CertifyArgs& a) {
  const auto system = system_from_json(read_json_file(a.system));
  DirectionCertificate cert;
  if (a.directions.empty() || a.directions == "auto") {
    cert = direction_search(system, a.rmax);
  } else {
    auto V = directions_from_json(read_json_file(a.directions));
    for (const auto& v : V) {
      if (v.dimension() != system.dimension()) {
        throw ParseError("direction dimension does not match the system");
      }
    }
    cert = delta_star(system, std::move(V));
  }
  emit(to_json(cert), a.out);
  if (!cert.certified) {
    std::cerr << "not certified: delta* = " << cert.delta_star << ", gap = " << cert.gap << "\n";
    return kFailure;
  }
  return kOk;
}

struct CoverArgs {
  std::string system;
  std::string certificate;
  std::optional<int> level;
  std::optional<double> epsilon;
  std::string mode = "exact";
  std::string out;
  std::string svg;
};

int cover(const CoverArgs& a) {
  const auto system = system_from_json(read_json_file(a.system));
  const auto cert = certificate_from_json(read_json_file(a.certificate));
  if (!cert.certified) throw ParseError("direction certificate is not certified");
  for (const auto& v : cert.V) {
    if (v.dimension() != system.dimension()) {
      throw ParseError("certificate dimension does not match the system");
    }
  }
  const CoverMode mode = cover_mode_from_string(a.mode);
  int n = 0;
  if (a.level) {
    n = *a.level;
    if (n < 1) throw ParseError("--level must be at least 1");
  } else if (a.epsilon) {
    try {
      const auto choice = required_level(system, cert, *a.epsilon);
      n = choice.level;
      std::cerr << "level " << n << " reaches width "
                << static_cast<double>(choice.width) << " < " << *a.epsilon << "\n";
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      return kFailure;
    }
  } else {
    throw ParseError("one of --level or --epsilon is required");
  }
  const auto result = build_cover(system, cert, n, mode);
  emit(to_json(result), a.out);
  if (!a.svg.empty()) {
    if (system.dimension() != 2) {
      std::cerr << "warning: SVG output is planar only; skipped\n";
    } else if (mode != CoverMode::kExact) {
      std::cerr << "warning: SVG output needs an exact-mode cover; skipped\n";
    } else {
      write_file_atomic(a.svg, render_svg(result));
    }
  }
  return kOk;
}

struct VerifyArgs {
  std::string cover;
  std::uint64_t samples = 10000;
  std::optional<int> depth;
  std::uint64_t seed = 1;
};

int verify(const VerifyArgs& a) {
  const Json j = read_json_file(a.cover);
  if (!j.is_object() || !j.contains("n")) throw ParseError("not a cover certificate");
  const int depth = a.depth.value_or(j.at("n").get<int>() + 8);
  const auto report = verify_all(j, a.samples, depth, a.seed);
  std::cout << report.to_json().dump(2) << "\n";
  return report.valid() ? kOk : kFailure;
}

struct ReduceArgs {
  std::string gds;
  int qmax = 3;
  std::string out;
};

int reduce(const ReduceArgs& a) {
  const auto g = gds_from_json(read_json_file(a.gds));
  try {
    const auto r = reduce_to_digit_system(g, a.qmax);
    std::cerr << "reduced at q = " << r.q << " to " << r.system.size() << " digits in base "
              << r.system.base() << "\n";
    emit(to_json(r.system), a.out);
    return kOk;
  } catch (const Inconclusive& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  }
}

struct FourierArgs {
  std::string system;
  std::string directions;
  std::string p = "uniform";
  int zmax = 5;
  int depth = kDefaultFourierDepth;
  double threshold = kDefaultFourierThreshold;
  std::string out;
};

ProbVector parse_weights(const std::string& weights, std::size_t size) {
  if (weights == "uniform") return uniform_prob(size);
  ProbVector p;
  std::string text = weights;
  for (char& c : text) {
    if (c == ',' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(text);
  double w;
  while (in >> w) p.push_back(w);
  if (!in.eof()) throw ParseError("cannot parse weights '" + weights + "'");
  if (p.size() != size) throw ParseError("weight count does not match the digit count");
  return p;
}

int fourier(const FourierArgs& a) {
  const auto system = system_from_json(read_json_file(a.system));
  const auto V = a.directions.empty() ? axis_and_diagonal_directions(system.dimension())
                                      : directions_from_json(read_json_file(a.directions));
  const TransferFactor phi(system, parse_weights(a.p, system.size()));
  Json scan = Json::array();
  for (const auto& e : modulus_table(phi, V, a.zmax, a.depth)) {
    scan.push_back({{"v", e.v.components()}, {"z", e.z}, {"modulus", e.modulus},
                    {"nonvanishing", e.modulus > a.threshold}});
  }
  Json invariance = Json::array();
  double worst = 0;
  for (const auto& v : V) {
    for (int z = 1; z <= a.zmax; ++z) {
      const auto c = check_scaling_invariance(phi, v, z, a.depth);
      worst = std::max(worst, c.difference);
      invariance.push_back({{"v", v.components()}, {"z", z}, {"difference", c.difference},
                            {"truncation_bound", c.truncation_bound}});
    }
  }
  emit({{"depth", a.depth}, {"threshold", a.threshold}, {"scan", scan},
        {"invariance", invariance}, {"max_invariance_difference", worst}},
       a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tube covers for digit-restricted self-similar sets"};
  app.require_subcommand(1);

  CertifyArgs certify_args;
  auto* c = app.add_subcommand("certify", "certify an entropy gap for a direction set");
  c->add_option("--system", certify_args.system, "system JSON")->required();
  c->add_option("--directions", certify_args.directions, "directions JSON, or 'auto'");
  c->add_option("--rmax", certify_args.rmax, "search radius for automatic directions");
  c->add_option("--out", certify_args.out, "output path (default stdout)");

  CoverArgs cover_args;
  auto* v = app.add_subcommand("cover", "build a level-n tube cover");
  v->add_option("--system", cover_args.system, "system JSON")->required();
  v->add_option("--certificate", cover_args.certificate, "direction certificate JSON")->required();
  auto* level = v->add_option("--level", cover_args.level, "cover level n");
  v->add_option("--epsilon", cover_args.epsilon, "target total width")->excludes(level);
  v->add_option("--mode", cover_args.mode, "exact or aggregated")
      ->check(CLI::IsMember({"exact", "aggregated"}));
  v->add_option("--out", cover_args.out, "output path (default stdout)");
  v->add_option("--svg", cover_args.svg, "SVG output path (planar covers)");

  VerifyArgs verify_args;
  auto* f = app.add_subcommand("verify", "verify a cover certificate");
  f->add_option("--cover", verify_args.cover, "cover JSON")->required();
  f->add_option("--samples", verify_args.samples, "Monte Carlo points (0 disables)");
  f->add_option("--depth", verify_args.depth, "sample depth (default n + 8)");
  f->add_option("--seed", verify_args.seed, "sampling seed");

  ReduceArgs reduce_args;
  auto* r = app.add_subcommand("reduce", "reduce a graph-directed system");
  r->add_option("--gds", reduce_args.gds, "graph-directed system JSON")->required();
  r->add_option("--qmax", reduce_args.qmax, "largest level to scan");
  r->add_option("--out", reduce_args.out, "output path (default stdout)");

  FourierArgs fourier_args;
  auto* u = app.add_subcommand("fourier", "Fourier diagnostics of the self-similar measure");
  u->add_option("--system", fourier_args.system, "system JSON")->required();
  u->add_option("--directions", fourier_args.directions, "directions JSON");
  u->add_option("--p", fourier_args.p, "'uniform' or comma-separated weights");
  u->add_option("--zmax", fourier_args.zmax, "largest multiple z");
  u->add_option("--depth", fourier_args.depth, "product truncation depth");
  u->add_option("--threshold", fourier_args.threshold, "nonvanishing threshold");
  u->add_option("--out", fourier_args.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*c) return certify(certify_args);
    if (*v) return cover(cover_args);
    if (*f) return verify(verify_args);
    if (*r) return reduce(reduce_args);
    if (*u) return fourier(fourier_args);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const CellCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const TypeCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const SystemError& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInput;
}
