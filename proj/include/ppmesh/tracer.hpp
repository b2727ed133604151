#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "ppmesh/configuration.hpp"
#include "ppmesh/mesh.hpp"

namespace ppmesh {

using rat64 = boost::rational<long long>;

// An undirected light path. The node list holds every node visited, floating
// at both ends only; tbu_seq holds one entry per TBU traversal (a TBU shows up
// twice when the path crosses it twice), so length == tbu_seq.size().
struct traced_path {
  std::vector<int> nodes;
  std::vector<int> tbu_seq;
  int length = 0;
  int bar_traversals = 0;

  int start_node() const { return nodes.front(); }
  int end_node() const { return nodes.back(); }

  friend bool operator==(const traced_path&, const traced_path&) = default;
};

// A closed loop of TBU edges not travelled by any path. The node cycle starts
// at its smallest node id and omits the repeat of the first node.
struct closed_loop {
  std::vector<int> nodes;
  std::vector<int> tbu_seq;
  int length = 0;

  friend bool operator==(const closed_loop&, const closed_loop&) = default;
};

struct trace_result {
  std::vector<traced_path> paths;
  std::vector<closed_loop> loops;

  long long path_length_sum() const;
  long long loop_length_sum() const;
};

// Traces every path (starting from the floating nodes in boundary order) and
// every leftover loop. Paths run from the smaller node id to the larger.
trace_result trace_all_paths(const mesh_graph& mesh, const configuration& config);

enum class path_type { S, A, O };

const char* path_type_name(path_type t);

// Side-label based classification; square meshes only.
path_type classify_path(const mesh_graph& mesh, const traced_path& path);
side_label path_start_side(const mesh_graph& mesh, const traced_path& path);
side_label path_end_side(const mesh_graph& mesh, const traced_path& path);

struct path_stats {
  std::vector<int> lengths;  // sorted descending
  long long sum = 0;
  long long k0 = 0;
  int max = 0;
  rat64 mean;
  rat64 variance;
};

// Exact statistics plus the recovered sum-format index k0 (sum = base + step*k0
// for the mesh family). Throws malformed_sum when the sum breaks that format.
path_stats compute_path_stats(const mesh_graph& mesh, const std::vector<traced_path>& paths);

}  // namespace ppmesh
