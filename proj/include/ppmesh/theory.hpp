#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppmesh/mesh.hpp"
#include "ppmesh/tracer.hpp"

namespace ppmesh {

// Everything here is closed-form arithmetic on the mesh dimensions; no graph
// is ever built. All values are exact (integers or rationals).

long long max_path_length(const mesh_spec& spec);

// Which realizable-length set a square-mesh length falls into. Lengths with
// residue 0, 1 or 2 (mod 4) form one full range; residue-3 lengths exist only
// inside a window that needs an odd M (counted along rows) or an odd N
// (columns). Hex and tri meshes realize every length up to the maximum.
struct realizability {
  bool ok = false;
  std::string witness_set;  // "full", "odd-cols-window", "odd-rows-window", "" when not realizable
};

realizability single_path_realizable(const mesh_spec& spec, long long x);

// Human-readable explanation of why x is not realizable; "" when it is.
std::string unrealizable_reason(const mesh_spec& spec, long long x);

struct type_rule {
  std::vector<int> residues;  // allowed length residues mod 4
  long long min_len = 0;
  long long max_len = 0;
};

// Residues and length window for a path of the given type starting on the
// given side. Square meshes only.
type_rule type_constraints(const mesh_spec& spec, path_type kind, side_label start);

// Upper bound on how many simultaneous paths of one length x fit in a mesh.
// Square meshes take the minimum of four components; hex/tri of the first two.
// An infinite component is inactive. c2 is the realizability gate: zero when
// no single path of length x exists at all.
struct multi_path_bound {
  long long x = 0;
  std::optional<long long> floor_component;  // floor(edge budget / (x-1)); empty at x = 1
  long long count_component = 0;             // total path count
  std::optional<long long> c1;               // 4 when x is even (square), else inactive
  std::optional<long long> c2;               // 0 when x is unrealizable (square), else inactive
  long long y_max = 0;
  std::string active;       // name of the component that attains the minimum
  bool tightness_caveat = false;  // square, x even, N or M below 2x: bound may overshoot
  std::string note;         // explanation when c2 fires or the caveat applies
};

multi_path_bound multi_path_upper_bound(const mesh_spec& spec, long long x);

// Path-length sums always have the form base + step*k, 0 <= k <= cell count.
struct sum_spectrum {
  long long base = 0;
  long long step = 0;
  long long kmax = 0;

  bool contains(long long sum) const {
    return sum >= base && (sum - base) % step == 0 && (sum - base) / step <= kmax;
  }
  long long value(long long k) const { return base + step * k; }
};

sum_spectrum path_sum_spectrum(const mesh_spec& spec);

struct stats_bound {
  rat64 mean;
  long long max_len = 0;
  rat64 var_bound;
};

// Exact mean, length ceiling and variance ceiling for a configuration whose
// path-length sum is base + step*k0.
stats_bound stats_bounds(const mesh_spec& spec, long long k0);

}  // namespace ppmesh
