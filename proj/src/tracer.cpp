#include "ppmesh/tracer.hpp"

#include <algorithm>
#include <numeric>

namespace ppmesh {

namespace {

int partner_port(const configuration& config, int port) {
  const int t = mesh_graph::port_tbu(port);
  const int end = mesh_graph::port_end(port);
  const int side = mesh_graph::port_side(port);
  const bool bar = config.state(t) == tbu_state::bar;
  return mesh_graph::port_id(t, 1 - end, bar ? side : 1 - side);
}

int node_of_port(const mesh_graph& mesh, int port) {
  return mesh.tbus()[static_cast<size_t>(mesh_graph::port_tbu(port))].node[port % 4];
}

int other_port(const node& nd, int port) { return nd.ports[0] == port ? nd.ports[1] : nd.ports[0]; }

}  // namespace

long long trace_result::path_length_sum() const {
  return std::accumulate(paths.begin(), paths.end(), 0LL,
                         [](long long acc, const traced_path& p) { return acc + p.length; });
}

long long trace_result::loop_length_sum() const {
  return std::accumulate(loops.begin(), loops.end(), 0LL,
                         [](long long acc, const closed_loop& l) { return acc + l.length; });
}

trace_result trace_all_paths(const mesh_graph& mesh, const configuration& config) {
  trace_result out;
  std::vector<bool> visited(static_cast<size_t>(4 * mesh.tbu_count()), false);

  for (const int start : mesh.floating_nodes()) {
    const int start_port = mesh.nodes()[static_cast<size_t>(start)].ports[0];
    if (visited[static_cast<size_t>(start_port)]) continue;

    traced_path path;
    path.nodes.push_back(start);
    int cur = start_port;
    while (true) {
      const int t = mesh_graph::port_tbu(cur);
      const int nxt = partner_port(config, cur);
      visited[static_cast<size_t>(cur)] = visited[static_cast<size_t>(nxt)] = true;
      path.tbu_seq.push_back(t);
      if (config.state(t) == tbu_state::bar) ++path.bar_traversals;
      const int nd = node_of_port(mesh, nxt);
      path.nodes.push_back(nd);
      if (mesh.nodes()[static_cast<size_t>(nd)].floating) break;
      cur = other_port(mesh.nodes()[static_cast<size_t>(nd)], nxt);
    }
    path.length = static_cast<int>(path.tbu_seq.size());
    if (path.nodes.back() < path.nodes.front()) {
      std::reverse(path.nodes.begin(), path.nodes.end());
      std::reverse(path.tbu_seq.begin(), path.tbu_seq.end());
    }
    out.paths.push_back(std::move(path));
  }

  for (int p0 = 0; p0 < 4 * mesh.tbu_count(); ++p0) {
    if (visited[static_cast<size_t>(p0)]) continue;
    closed_loop loop;
    loop.nodes.push_back(node_of_port(mesh, p0));
    int cur = p0;
    while (true) {
      const int nxt = partner_port(config, cur);
      visited[static_cast<size_t>(cur)] = visited[static_cast<size_t>(nxt)] = true;
      loop.tbu_seq.push_back(mesh_graph::port_tbu(cur));
      const node& nd = mesh.nodes()[static_cast<size_t>(node_of_port(mesh, nxt))];
      const int cont = other_port(nd, nxt);
      if (cont == p0) break;
      loop.nodes.push_back(nd.index);
      cur = cont;
    }
    loop.length = static_cast<int>(loop.tbu_seq.size());
    const auto min_it = std::min_element(loop.nodes.begin(), loop.nodes.end());
    const auto shift = min_it - loop.nodes.begin();
    std::rotate(loop.nodes.begin(), loop.nodes.begin() + shift, loop.nodes.end());
    std::rotate(loop.tbu_seq.begin(), loop.tbu_seq.begin() + shift, loop.tbu_seq.end());
    out.loops.push_back(std::move(loop));
  }

  return out;
}

const char* path_type_name(path_type t) {
  switch (t) {
    case path_type::S: return "S";
    case path_type::A: return "A";
    case path_type::O: return "O";
  }
  return "?";
}

namespace {

side_label floating_side(const mesh_graph& mesh, int node_index) {
  if (mesh.spec().fam != family::square)
    fail(errc::unsupported_family,
         "path sides are labelled for square meshes only, not " + mesh.spec().to_string());
  const node& nd = mesh.nodes()[static_cast<size_t>(node_index)];
  if (!nd.has_side())
    fail(errc::unsupported_family, "node has no side label");
  return nd.side_of();
}

}  // namespace

side_label path_start_side(const mesh_graph& mesh, const traced_path& path) {
  return floating_side(mesh, path.start_node());
}

side_label path_end_side(const mesh_graph& mesh, const traced_path& path) {
  return floating_side(mesh, path.end_node());
}

path_type classify_path(const mesh_graph& mesh, const traced_path& path) {
  const side_label s = path_start_side(mesh, path);
  const side_label e = path_end_side(mesh, path);
  if (s == e) return path_type::S;
  const auto opposite = [](side_label a, side_label b) {
    return (a == side_label::left && b == side_label::right) ||
           (a == side_label::right && b == side_label::left) ||
           (a == side_label::top && b == side_label::bottom) ||
           (a == side_label::bottom && b == side_label::top);
  };
  return opposite(s, e) ? path_type::O : path_type::A;
}

path_stats compute_path_stats(const mesh_graph& mesh, const std::vector<traced_path>& paths) {
  if (paths.empty()) fail(errc::malformed_sum, "cannot compute statistics of an empty path set");
  path_stats st;
  st.lengths.reserve(paths.size());
  long long sum_sq = 0;
  for (const traced_path& p : paths) {
    st.lengths.push_back(p.length);
    st.sum += p.length;
    sum_sq += static_cast<long long>(p.length) * p.length;
  }
  std::sort(st.lengths.begin(), st.lengths.end(), std::greater<int>());
  st.max = st.lengths.front();

  const mesh_spec& spec = mesh.spec();
  const long long n = spec.rows, m = spec.cols;
  long long base = 0, step = 1;
  switch (spec.fam) {
    case family::square: base = 2 * n + 2 * m; step = 4; break;
    case family::hexagonal: base = 4 * n + 4 * m - 2; step = 6; break;
    case family::triangular: base = 2 * n + m; step = 3; break;
  }
  if (st.sum < base || (st.sum - base) % step != 0)
    fail(errc::malformed_sum, "path length sum " + std::to_string(st.sum) +
                                  " does not match the form " + std::to_string(base) + " + " +
                                  std::to_string(step) + "*k for " + spec.to_string());
  st.k0 = (st.sum - base) / step;
  if (st.k0 > spec.cell_count())
    fail(errc::malformed_sum, "recovered k0 = " + std::to_string(st.k0) +
                                  " exceeds the cell count of " + spec.to_string());

  const long long count = static_cast<long long>(paths.size());
  st.mean = rat64(st.sum, count);
  st.variance = rat64(sum_sq, count) - st.mean * st.mean;
  return st;
}

}  // namespace ppmesh
