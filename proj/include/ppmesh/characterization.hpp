#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ppmesh/configuration.hpp"
#include "ppmesh/response.hpp"
#include "ppmesh/tracer.hpp"

namespace ppmesh {

// Per-TBU deviations from the base physical parameters. Empty vectors mean
// uniform; otherwise one entry per TBU in canonical order. Multiplicative
// complex measurement noise is off by default so round-trips stay exact.
struct process_variation {
  std::vector<double> alpha;
  std::vector<double> length;
  double noise = 0.0;
  std::uint64_t noise_seed = 0;

  void validate(int tbu_count) const;  // throws invalid_argument
};

// One output/input ratio per undirected path.
struct measurement {
  int start_node = -1;
  int end_node = -1;
  int length = 0;
  complexd ratio;

  friend bool operator==(const measurement&, const measurement&) = default;
};

using measurement_set = std::vector<measurement>;

// Injects one source per floating-node pair and records the per-path ratio
//   (-1)^q * prod over traversed TBUs of alpha_t e^{-j omega n_eff L_t / c}.
// Paths come out in boundary order of their start node.
measurement_set simulate_measurements(const mesh_graph& mesh, const configuration& config,
                                      const tbu_physical& base,
                                      const process_variation& variation = {});

// exp(sum log|r_i| / S) with S the path-length sum of the configuration the
// measurements came from. S is recomputed as base + step*k0 and cross-checked
// against the measured lengths; a disagreement throws inconsistent_k. Under
// per-TBU variation the estimate equals the traversal-weighted geometric mean
// of the alpha values.
double estimate_alpha(const measurement_set& ms, const mesh_graph& mesh, long long k0);

// Inverts the summed path phase, [-sum Phase(r_i) + 2 d pi] * c / (S omega
// n_eff), and returns every candidate length whose integer d lands in
// [l_min, l_max], ascending. Valid for configurations with zero bar parity on
// every path (all-cross style). Throws no_candidate_in_window when the window
// contains no candidate.
std::vector<double> estimate_length(const measurement_set& ms, const mesh_graph& mesh,
                                    double n_eff, double omega, long long k0,
                                    double l_min, double l_max);

// Spacing between neighbouring length candidates, 2 pi c / (S omega n_eff).
double length_candidate_spacing(const mesh_graph& mesh, double n_eff, double omega,
                                long long k0);

// Two distinct per-TBU alpha maps that produce identical measurements on the
// stated configuration: one non-peripheral TBU scaled by `factor`, a partner
// TBU scaled by 1/factor, where every path traverses both equally often.
struct ambiguity_demo {
  configuration config;
  int scaled_up_tbu = -1;    // non-peripheral
  int scaled_down_tbu = -1;
  double factor = 1.0;
  process_variation first;
  process_variation second;
};

ambiguity_demo demonstrate_alpha_ambiguity(const mesh_graph& mesh,
                                           const tbu_physical& base = {},
                                           double factor = 1.01);

// CSV round-trip, columns start_node,end_node,length,re,im with a header row.
measurement_set read_measurements_csv(std::istream& in);
measurement_set load_measurements_csv(const std::string& path);
void write_measurements_csv(std::ostream& out, const measurement_set& ms);

}  // namespace ppmesh
