#pragma once

#include "ppmesh/configuration.hpp"
#include "ppmesh/mesh.hpp"
#include "ppmesh/tracer.hpp"

namespace ppmesh {

struct construct_result {
  configuration config;
  int start_node = -1;
  int end_node = -1;
  traced_path path;
};

// Builds a configuration whose trace contains a path of exactly length x and
// returns that path's endpoints. Square and hex meshes use closed-form cross
// sets (one recipe per length residue); triangular meshes fall back to an
// exhaustive search and are only supported within the enumeration cap. Every
// result is re-traced before being returned.
construct_result construct_single_path(const mesh_graph& mesh, long long x);

// One path of maximal length (4NM+1), everything else length 1: one left
// peripheral vertical TBU, all non-peripheral verticals and the N-1 row-turn
// horizontals in cross. Square meshes only.
configuration construct_max_snake(const mesh_graph& mesh);

// A configuration whose traced lengths are {step*k0 + 1, 1, 1, ...}: the
// variance-maximizing multiset for the given path-length sum.
configuration construct_extremal(const mesh_graph& mesh, long long k0);

// The cross set of the snake covering the first j cells in zigzag order
// (row 1 left to right, row 2 right to left, ...). Exposed for tests.
std::vector<int> snake_cross_set(const mesh_graph& mesh, long long cells);

}  // namespace ppmesh
