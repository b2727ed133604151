#include "ppmesh/constructor.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppmesh/theory.hpp"

namespace ppmesh {

namespace {

std::vector<cell_ref> zigzag_cells(const mesh_spec& spec) {
  std::vector<cell_ref> order;
  for (int i = 1; i <= spec.rows; ++i) {
    if (i % 2 == 1)
      for (int j = 1; j <= spec.cols; ++j) order.push_back({i, j});
    else
      for (int j = spec.cols; j >= 1; --j) order.push_back({i, j});
  }
  return order;
}

// TBUs between consecutive cells of the zigzag, in consumption order.
std::vector<int> zigzag_separators(const mesh_graph& g) {
  const auto order = zigzag_cells(g.spec());
  std::vector<int> seps;
  for (size_t i = 0; i + 1 < order.size(); ++i)
    seps.push_back(g.require_tbu(order[i], order[i + 1]));
  return seps;
}

int left_entry(const mesh_graph& g) { return g.require_tbu({1, 0}, {1, 1}); }

configuration transpose_config(const mesh_graph& g, const mesh_graph& gt,
                               const configuration& ct) {
  configuration c = configuration::all_bar(g);
  for (const tbu& t : gt.tbus())
    if (ct.state(t.index) == tbu_state::cross)
      c.set(g.require_tbu({t.cells[0].col, t.cells[0].row}, {t.cells[1].col, t.cells[1].row}),
            tbu_state::cross);
  return c;
}

configuration square_recipe(const mesh_graph& g, long long x) {
  const mesh_spec& spec = g.spec();
  const long long n = spec.rows, m = spec.cols, nm = n * m;

  if (x % 4 == 3) {
    if (m % 2 == 1 && x >= 2 * m + 1 && x <= 4 * nm + 1 - 2 * m) {
      // All first-row verticals in cross give two opposite-side paths of
      // length 2M+1; each snake separator after cell M adds 4 to one of them.
      std::vector<int> cross;
      for (int c = 0; c <= m; ++c)
        cross.push_back(g.require_tbu({1, c}, {1, c + 1}));
      const auto seps = zigzag_separators(g);
      const long long t = (x - 2 * m - 1) / 4;
      for (long long i = 0; i < t; ++i) cross.push_back(seps[static_cast<size_t>(m - 1 + i)]);
      return configuration::from_cross_set(g, cross);
    }
    const mesh_graph gt({family::square, spec.cols, spec.rows});
    return transpose_config(g, gt, square_recipe(gt, x));
  }

  if (x % 4 == 1 && x == 4 * nm + 1 - 2 * m && n >= 2) {
    // Full snake with the right peripheral vertical of row 2 also crossed;
    // splits the maximum path into lengths (4NM+1-2M) and (2M+1).
    std::vector<int> cross = snake_cross_set(g, nm);
    cross.push_back(g.require_tbu({2, static_cast<int>(m)}, {2, static_cast<int>(m) + 1}));
    return configuration::from_cross_set(g, cross);
  }

  if (x % 4 == 1) return configuration::from_cross_set(g, snake_cross_set(g, (x - 1) / 4));

  if (x % 4 == 0) {
    std::vector<int> cross = snake_cross_set(g, x / 4);
    cross.push_back(g.require_tbu({0, 1}, {1, 1}));
    return configuration::from_cross_set(g, cross);
  }

  // x = 4j-2: the j = 1 case shares the length-4 recipe (its trace also holds
  // a length-2 path); j >= 2 tops the j-cell snake with the second top
  // horizontal, splitting off a length-4 path and leaving 4j-2.
  const long long j = (x + 2) / 4;
  if (j == 1) {
    std::vector<int> cross = snake_cross_set(g, 1);
    cross.push_back(g.require_tbu({0, 1}, {1, 1}));
    return configuration::from_cross_set(g, cross);
  }
  if (m >= 2) {
    std::vector<int> cross = snake_cross_set(g, j);
    cross.push_back(g.require_tbu({0, 2}, {1, 2}));
    return configuration::from_cross_set(g, cross);
  }
  const mesh_graph gt({family::square, spec.cols, spec.rows});
  return transpose_config(g, gt, square_recipe(gt, x));
}

configuration hex_recipe(const mesh_graph& g, long long x) {
  const mesh_spec& spec = g.spec();
  if (x == 1) return configuration::all_bar(g);
  const long long j = (x + 4) / 6;
  const long long delta = 6 * j + 1 - x;

  // Lengths 2 and 3 split off the one-cell snake via its top edges; the
  // residue-2/3 recipes for longer paths need a second column and transpose
  // when the mesh is a single column wide.
  if (delta >= 4 && j == 1) {
    std::vector<int> cross = snake_cross_set(g, 1);
    cross.push_back(delta == 4 ? g.require_tbu({0, 2}, {1, 1}) : g.require_tbu({0, 1}, {1, 1}));
    return configuration::from_cross_set(g, cross);
  }
  if (delta >= 4 && spec.cols < 2) {
    const mesh_graph gt({family::hexagonal, spec.cols, spec.rows});
    return transpose_config(g, gt, hex_recipe(gt, x));
  }

  std::vector<int> cross = snake_cross_set(g, j);
  const auto add = [&](cell_ref a, cell_ref b) { cross.push_back(g.require_tbu(a, b)); };
  switch (delta) {
    case 0: break;
    case 1: add({0, 1}, {1, 1}); break;
    case 2: add({0, 2}, {1, 1}); break;
    case 3: add({0, 2}, {1, 1}); add({1, 1}, {2, 0}); break;
    case 4: add({0, 2}, {1, 2}); break;
    case 5: add({0, 3}, {1, 2}); break;
  }
  return configuration::from_cross_set(g, cross);
}

configuration tri_search(const mesh_graph& g, long long x) {
  if (g.tbu_count() > kDefaultEnumCapBits)
    fail(errc::unsupported_family,
         "no closed-form construction for triangular meshes; " + g.spec().to_string() +
             " is too large for the exhaustive fallback");
  const config_space space(g);
  for (std::uint64_t k = 0; k < space.size(); ++k) {
    const configuration c = space.at(k);
    for (const traced_path& p : trace_all_paths(g, c).paths)
      if (p.length == x) return c;
  }
  fail(errc::not_realizable, "exhaustive search found no path of length " + std::to_string(x) +
                                 " in " + g.spec().to_string());
}


}  // namespace

std::vector<int> snake_cross_set(const mesh_graph& mesh, long long cells) {
  if (cells == 0) return {};
  std::vector<int> cross{left_entry(mesh)};
  const auto seps = zigzag_separators(mesh);
  for (long long i = 0; i + 1 < cells; ++i) cross.push_back(seps[static_cast<size_t>(i)]);
  return cross;
}

construct_result construct_single_path(const mesh_graph& mesh, long long x) {
  const mesh_spec& spec = mesh.spec();
  if (!single_path_realizable(spec, x).ok)
    fail(errc::not_realizable, unrealizable_reason(spec, x));

  configuration config = configuration::all_bar(mesh);
  switch (spec.fam) {
    case family::square: config = square_recipe(mesh, x); break;
    case family::hexagonal: config = hex_recipe(mesh, x); break;
    case family::triangular: config = tri_search(mesh, x); break;
  }

  const trace_result tr = trace_all_paths(mesh, config);
  for (const traced_path& p : tr.paths)
    if (p.length == x)
      return {std::move(config), p.start_node(), p.end_node(), p};
  throw std::logic_error("construction recipe missed its target length " + std::to_string(x) +
                         " in " + spec.to_string());
}

configuration construct_max_snake(const mesh_graph& mesh) {
  const mesh_spec& spec = mesh.spec();
  if (spec.fam != family::square)
    fail(errc::unsupported_family,
         "the maximum-length snake recipe is defined for square meshes, not " + spec.to_string());
  std::vector<int> cross{left_entry(mesh)};
  for (const tbu& t : mesh.tbus())
    if (t.orient == orientation::vertical && !t.peripheral) cross.push_back(t.index);
  for (int i = 1; i < spec.rows; ++i) {
    const int col = i % 2 == 1 ? spec.cols : 1;
    cross.push_back(mesh.require_tbu({i, col}, {i + 1, col}));
  }
  return configuration::from_cross_set(mesh, cross);
}

configuration construct_extremal(const mesh_graph& mesh, long long k0) {
  const mesh_spec& spec = mesh.spec();
  if (k0 < 0 || k0 > spec.cell_count())
    fail(errc::out_of_range, "k0 = " + std::to_string(k0) + " outside [0, " +
                                 std::to_string(spec.cell_count()) + "] for " + spec.to_string());
  if (spec.fam != family::triangular)
    return configuration::from_cross_set(mesh, snake_cross_set(mesh, k0));

  // No closed-form triangular recipe: search for the extremal length multiset.
  if (mesh.tbu_count() > kDefaultEnumCapBits)
    fail(errc::unsupported_family,
         "no closed-form construction for triangular meshes; " + spec.to_string() +
             " is too large for the exhaustive fallback");
  const long long target_max = 3 * k0 + 1;
  const config_space space(mesh);
  for (std::uint64_t k = 0; k < space.size(); ++k) {
    const configuration c = space.at(k);
    const trace_result tr = trace_all_paths(mesh, c);
    bool extremal = true;
    int longest = 0;
    for (const traced_path& p : tr.paths) {
      if (p.length > 1 && p.length != target_max) extremal = false;
      longest = std::max(longest, p.length);
    }
    const long long ones =
        std::count_if(tr.paths.begin(), tr.paths.end(),
                      [](const traced_path& p) { return p.length == 1; });
    if (extremal && longest == target_max &&
        (k0 == 0 || ones + 1 == static_cast<long long>(tr.paths.size())))
      return c;
  }
  fail(errc::not_realizable, "exhaustive search found no extremal configuration for k0 = " +
                                 std::to_string(k0) + " in " + spec.to_string());
}

}  // namespace ppmesh
