#include "ppmesh/tracer.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "doctest.h"
#include "ppmesh/theory.hpp"

using namespace ppmesh;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a ppmesh::error");
  return errc::invalid_spec;
}

std::vector<int> sorted_lengths(const trace_result& tr) {
  std::vector<int> out;
  for (const traced_path& p : tr.paths) out.push_back(p.length);
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

// Structural checks every trace of every configuration must satisfy.
void check_trace_invariants(const mesh_graph& g, const configuration& c, const trace_result& tr) {
  CHECK(static_cast<long long>(tr.paths.size()) == g.spec().path_count());
  CHECK(tr.path_length_sum() + tr.loop_length_sum() == 2 * g.tbu_count());

  std::map<int, int> traversals_per_tbu;
  std::map<int, int> endpoint_uses;
  for (const traced_path& p : tr.paths) {
    REQUIRE(p.length == static_cast<int>(p.tbu_seq.size()));
    REQUIRE(p.nodes.size() == p.tbu_seq.size() + 1);
    CHECK(p.start_node() < p.end_node());
    CHECK(g.nodes()[p.start_node()].floating);
    CHECK(g.nodes()[p.end_node()].floating);
    for (size_t i = 1; i + 1 < p.nodes.size(); ++i)
      CHECK_FALSE(g.nodes()[p.nodes[i]].floating);
    ++endpoint_uses[p.start_node()];
    ++endpoint_uses[p.end_node()];
    for (const int t : p.tbu_seq) ++traversals_per_tbu[t];
    if (g.spec().fam == family::square) {
      for (size_t i = 1; i < p.tbu_seq.size(); ++i)
        CHECK(g.tbus()[p.tbu_seq[i]].orient != g.tbus()[p.tbu_seq[i - 1]].orient);
    }
  }
  for (const closed_loop& l : tr.loops) {
    REQUIRE(l.length == static_cast<int>(l.tbu_seq.size()));
    CHECK(l.nodes.size() == l.tbu_seq.size());
    if (g.spec().fam == family::square) CHECK(l.length % 4 == 0);
    for (const int t : l.tbu_seq) ++traversals_per_tbu[t];
    for (const int n : l.nodes) CHECK_FALSE(g.nodes()[n].floating);
  }
  for (const tbu& t : g.tbus()) CHECK(traversals_per_tbu[t.index] == 2);
  CHECK(static_cast<int>(endpoint_uses.size()) == g.floating_count());
  for (const auto& [node, uses] : endpoint_uses) CHECK(uses == 1);

  const path_stats st = compute_path_stats(g, tr.paths);
  const sum_spectrum spectrum = path_sum_spectrum(g.spec());
  CHECK(spectrum.contains(st.sum));
  const stats_bound bounds = stats_bounds(g.spec(), st.k0);
  CHECK(st.max <= bounds.max_len);
  CHECK(st.mean == bounds.mean);
  CHECK(st.variance <= bounds.var_bound);
  (void)c;
}

// Path type residues and windows for square meshes.
void check_square_types(const mesh_graph& g, const trace_result& tr) {
  for (const traced_path& p : tr.paths) {
    const path_type kind = classify_path(g, p);
    const type_rule rule = type_constraints(g.spec(), kind, path_start_side(g, p));
    CHECK(std::count(rule.residues.begin(), rule.residues.end(), p.length % 4) == 1);
    CHECK(p.length >= rule.min_len);
    CHECK(p.length <= rule.max_len);
  }
}

}  // namespace

TEST_CASE("all-cross 2x2 uses every edge: path sum 24, no loops") {
  const mesh_graph g({family::square, 2, 2});
  const trace_result tr = trace_all_paths(g, configuration::all_cross(g));
  CHECK(tr.paths.size() == 8);
  CHECK(tr.loops.empty());
  CHECK(tr.path_length_sum() == 24);
}

TEST_CASE("all-bar square meshes make one length-1 path per peripheral TBU") {
  const mesh_graph g({family::square, 1, 1});
  const trace_result tr = trace_all_paths(g, configuration::all_bar(g));
  CHECK(sorted_lengths(tr) == std::vector<int>{1, 1, 1, 1});
  CHECK(tr.path_length_sum() == 4);
  REQUIRE(tr.loops.size() == 1);
  CHECK(tr.loops[0].length == 4);

  const mesh_graph g22({family::square, 2, 2});
  const trace_result tr22 = trace_all_paths(g22, configuration::all_bar(g22));
  CHECK(sorted_lengths(tr22) == std::vector<int>(8, 1));
  CHECK(tr22.loops.size() == 4);
  for (const closed_loop& l : tr22.loops) CHECK(l.length == 4);
}

TEST_CASE("all-cross 1x1 square pairs up adjacent sides") {
  const mesh_graph g({family::square, 1, 1});
  const trace_result tr = trace_all_paths(g, configuration::all_cross(g));
  CHECK(sorted_lengths(tr) == std::vector<int>{2, 2, 2, 2});
  CHECK(tr.loops.empty());
  for (const traced_path& p : tr.paths) CHECK(classify_path(g, p) == path_type::A);
}

TEST_CASE("a 2x2 configuration with four cross TBUs realizes a length-4 path") {
  const mesh_graph g({family::square, 2, 2});
  bool found = false;
  for (std::uint64_t k = 0; k < 4096 && !found; ++k) {
    const configuration c = configuration::from_index(g, k);
    if (c.cross_count() != 4) continue;
    const trace_result tr = trace_all_paths(g, c);
    for (const traced_path& p : tr.paths)
      if (p.length == 4) found = true;
  }
  CHECK(found);
}

TEST_CASE("exhaustive sweeps satisfy every trace invariant") {
  for (const mesh_spec spec :
       {mesh_spec{family::square, 1, 1}, mesh_spec{family::square, 2, 2},
        mesh_spec{family::hexagonal, 1, 1}, mesh_spec{family::triangular, 1, 2}}) {
    CAPTURE(spec.to_string());
    const mesh_graph g(spec);
    const config_space space(g);
    for (std::uint64_t k = 0; k < space.size(); ++k) {
      const configuration c = space.at(k);
      const trace_result tr = trace_all_paths(g, c);
      check_trace_invariants(g, c, tr);
      if (spec.fam == family::square) check_square_types(g, tr);
    }
  }
}

TEST_CASE("sampled 2x3 sweep satisfies every trace invariant") {
  const mesh_graph g({family::square, 2, 3});
  const config_space space(g);
  for (std::uint64_t k = 0; k < space.size(); k += 37) {
    const configuration c = space.at(k);
    const trace_result tr = trace_all_paths(g, c);
    check_trace_invariants(g, c, tr);
    check_square_types(g, tr);
  }
}

TEST_CASE("tracing is deterministic") {
  const mesh_graph g({family::square, 2, 3});
  const configuration c = configuration::from_index(g, 0b10110010101000111);
  const trace_result a = trace_all_paths(g, c);
  const trace_result b = trace_all_paths(g, c);
  CHECK(a.paths == b.paths);
  CHECK(a.loops == b.loops);
}

TEST_CASE("path statistics of the extremal length multiset") {
  const mesh_graph g({family::square, 2, 2});
  std::vector<traced_path> paths(8);
  paths[0].length = 17;
  for (int i = 1; i < 8; ++i) paths[i].length = 1;
  const path_stats st = compute_path_stats(g, paths);
  CHECK(st.sum == 24);
  CHECK(st.k0 == 4);
  CHECK(st.max == 17);
  CHECK(st.mean == rat64(3));
  CHECK(st.variance == rat64(28));
  CHECK(st.variance == stats_bounds(g.spec(), 4).var_bound);
  CHECK(st.lengths == std::vector<int>{17, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("sums outside the family format are rejected") {
  const mesh_graph g({family::square, 1, 1});
  std::vector<traced_path> paths(4);
  paths[0].length = 6;
  for (int i = 1; i < 4; ++i) paths[i].length = 1;
  CHECK(code_of([&] { compute_path_stats(g, paths); }) == errc::malformed_sum);
  CHECK(code_of([&] { compute_path_stats(g, {}); }) == errc::malformed_sum);
}

TEST_CASE("side classification is refused off the square family") {
  const mesh_graph g({family::hexagonal, 1, 1});
  const trace_result tr = trace_all_paths(g, configuration::all_cross(g));
  REQUIRE(!tr.paths.empty());
  CHECK(code_of([&] { classify_path(g, tr.paths[0]); }) == errc::unsupported_family);
}
