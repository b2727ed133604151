#include "ppmesh/mesh.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ppmesh {

const char* family_name(family f) {
  switch (f) {
    case family::square: return "square";
    case family::hexagonal: return "hex";
    case family::triangular: return "tri";
  }
  return "?";
}

family family_from_string(const std::string& s) {
  if (s == "square") return family::square;
  if (s == "hex" || s == "hexagonal") return family::hexagonal;
  if (s == "tri" || s == "triangular") return family::triangular;
  fail(errc::invalid_spec, "unknown mesh family '" + s + "' (expected square, hex or tri)");
}

const char* side_label_name(side_label s) {
  switch (s) {
    case side_label::left: return "left";
    case side_label::right: return "right";
    case side_label::top: return "top";
    case side_label::bottom: return "bottom";
  }
  return "?";
}

void mesh_spec::validate() const {
  if (rows < 1 || cols < 1)
    fail(errc::invalid_spec, "mesh dimensions must be positive, got " + std::to_string(rows) +
                                 "x" + std::to_string(cols));
  if (fam == family::triangular && cols % 2 != 0)
    fail(errc::invalid_spec,
         "triangular mesh needs an even column count for a parallelogram shape, got cols=" +
             std::to_string(cols));
}

long long mesh_spec::cell_count() const {
  return static_cast<long long>(rows) * cols;
}

long long mesh_spec::tbu_count() const {
  const long long n = rows, m = cols;
  switch (fam) {
    case family::square: return n * (m + 1) + m * (n + 1);
    case family::hexagonal: return 3 * n * m + 2 * n + 2 * m - 1;
    case family::triangular: return (3 * n * m + 2 * n + m) / 2;
  }
  return 0;
}

long long mesh_spec::peripheral_tbu_count() const {
  const long long n = rows, m = cols;
  switch (fam) {
    case family::square: return 2 * n + 2 * m;
    case family::hexagonal: return 4 * n + 4 * m - 2;
    case family::triangular: return 2 * n + m;
  }
  return 0;
}

long long mesh_spec::floating_count() const { return 2 * peripheral_tbu_count(); }

long long mesh_spec::nonfloating_count() const {
  const long long n = rows, m = cols;
  switch (fam) {
    case family::square: return 4 * n * m;
    case family::hexagonal: return 6 * n * m;
    case family::triangular: return 3 * n * m;
  }
  return 0;
}

long long mesh_spec::path_count() const { return peripheral_tbu_count(); }

std::string mesh_spec::to_string() const {
  std::ostringstream os;
  os << family_name(fam) << ":" << rows << "x" << cols;
  return os.str();
}

mesh_spec mesh_spec::parse(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    fail(errc::invalid_spec, "mesh spec '" + s + "' must look like family:NxM, e.g. square:2x3");
  mesh_spec spec;
  spec.fam = family_from_string(s.substr(0, colon));
  const std::string dims = s.substr(colon + 1);
  const auto x = dims.find('x');
  if (x == std::string::npos)
    fail(errc::invalid_spec, "mesh spec '" + s + "' must look like family:NxM, e.g. square:2x3");
  try {
    size_t used = 0;
    spec.rows = std::stoi(dims.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(dims);
    const std::string mstr = dims.substr(x + 1);
    spec.cols = std::stoi(mstr, &used);
    if (used != mstr.size()) throw std::invalid_argument(dims);
  } catch (const std::logic_error&) {
    fail(errc::invalid_spec, "mesh spec '" + s + "' has non-numeric dimensions");
  }
  spec.validate();
  return spec;
}

std::string tbu::name() const {
  std::ostringstream os;
  os << "(" << cells[0].row << "," << cells[0].col << ")-(" << cells[1].row << ","
     << cells[1].col << ")";
  return os.str();
}

mesh_graph::mesh_graph(mesh_spec spec) : spec_(spec) {
  spec_.validate();
  build();
  assign_boundary_indices();
  check_counts();
}

bool mesh_graph::cell_is_real(cell_ref c) const {
  return c.row >= 1 && c.row <= spec_.rows && c.col >= 1 && c.col <= spec_.cols;
}

std::vector<cell_ref> mesh_graph::cells() const {
  std::vector<cell_ref> out;
  out.reserve(static_cast<size_t>(spec_.cell_count()));
  for (int i = 1; i <= spec_.rows; ++i)
    for (int j = 1; j <= spec_.cols; ++j) out.push_back({i, j});
  return out;
}

std::vector<vertex_ref> mesh_graph::cell_polygon(cell_ref c) const {
  const int i = c.row, j = c.col;
  switch (spec_.fam) {
    case family::square:
      return {{j - 1, i - 1}, {j, i - 1}, {j, i}, {j - 1, i}};
    case family::hexagonal: {
      const int cx = 2 * (j - 1) + (i - 1), cy = 3 * (i - 1);
      return {{cx, cy - 2},     {cx + 1, cy - 1}, {cx + 1, cy + 1},
              {cx, cy + 2},     {cx - 1, cy + 1}, {cx - 1, cy - 1}};
    }
    case family::triangular: {
      if (j % 2 == 1) {  // down-pointing
        const int cc = (j - 1) / 2;
        return {{2 * cc + i - 1, i - 1}, {2 * cc + i + 1, i - 1}, {2 * cc + i, i}};
      }
      const int cc = j / 2 - 1;  // up-pointing
      return {{2 * cc + i + 1, i - 1}, {2 * cc + i + 2, i}, {2 * cc + i, i}};
    }
  }
  return {};
}

cell_ref mesh_graph::neighbor_cell(cell_ref c, int slot) const {
  const int i = c.row, j = c.col;
  switch (spec_.fam) {
    case family::square: {
      static constexpr int di[4] = {-1, 0, 1, 0};
      static constexpr int dj[4] = {0, 1, 0, -1};
      return {i + di[slot], j + dj[slot]};
    }
    case family::hexagonal: {
      static constexpr int di[6] = {-1, 0, 1, 1, 0, -1};
      static constexpr int dj[6] = {1, 1, 0, -1, -1, 0};
      return {i + di[slot], j + dj[slot]};
    }
    case family::triangular: {
      if (j % 2 == 1) {  // down: top, right, left
        static constexpr int di[3] = {-1, 0, 0};
        static constexpr int dj[3] = {1, 1, -1};
        return {i + di[slot], j + dj[slot]};
      }
      // up: right, bottom, left
      static constexpr int di[3] = {0, 1, 0};
      static constexpr int dj[3] = {1, -1, -1};
      return {i + di[slot], j + dj[slot]};
    }
  }
  return {};
}

namespace {

orientation classify_orientation(vertex_ref a, vertex_ref b) {
  if (a.y == b.y) return orientation::horizontal;
  if (a.x == b.x) return orientation::vertical;
  return b.x > a.x ? orientation::diag_down : orientation::diag_up;
}

// Canonical TBU order. Square: row bands top to bottom, horizontal TBUs of a
// vertex row first, then the verticals below it, left to right within a band.
// Hex/tri: lexicographic by sorted endpoint coordinates.
std::tuple<int, int, int, int> order_key(family fam, vertex_ref a, vertex_ref b) {
  if (fam == family::square) {
    const bool vertical = a.x == b.x;
    return {2 * a.y + (vertical ? 1 : 0), a.x, 0, 0};
  }
  return {a.y, a.x, b.y, b.x};
}

}  // namespace

void mesh_graph::build() {
  struct edge_rec {
    vertex_ref a, b;
    std::array<cell_ref, 2> cells;
    std::array<bool, 2> real;
  };
  std::map<std::pair<vertex_ref, vertex_ref>, edge_rec> edge_map;

  for (const cell_ref c : cells()) {
    const auto poly = cell_polygon(c);
    const int n = static_cast<int>(poly.size());
    for (int k = 0; k < n; ++k) {
      const vertex_ref u = poly[k], v = poly[(k + 1) % n];
      const auto key = std::minmax(u, v);
      const cell_ref nb = neighbor_cell(c, k);
      auto it = edge_map.find({key.first, key.second});
      if (it == edge_map.end()) {
        edge_rec rec{key.first, key.second, {std::min(c, nb), std::max(c, nb)},
                     {false, false}};
        rec.real[rec.cells[0] == c ? 0 : 1] = true;
        rec.real[rec.cells[0] == nb ? 0 : 1] = cell_is_real(nb);
        edge_map.insert({{key.first, key.second}, rec});
      } else {
        edge_rec& rec = it->second;
        if (!((rec.cells[0] == c && rec.cells[1] == nb) ||
              (rec.cells[0] == nb && rec.cells[1] == c)))
          throw std::logic_error("mesh builder: the two cells sharing an edge disagree");
      }
    }
  }

  std::vector<const edge_rec*> order;
  order.reserve(edge_map.size());
  for (const auto& [key, rec] : edge_map) order.push_back(&rec);
  std::sort(order.begin(), order.end(), [this](const edge_rec* l, const edge_rec* r) {
    return order_key(spec_.fam, l->a, l->b) < order_key(spec_.fam, r->a, r->b);
  });

  tbus_.reserve(order.size());
  for (const edge_rec* rec : order) {
    if (!rec->real[0] && !rec->real[1])
      throw std::logic_error("mesh builder: edge with two notional cells");
    tbu t;
    t.index = static_cast<int>(tbus_.size());
    t.a = rec->a;
    t.b = rec->b;
    t.cells = rec->cells;
    t.cell_real = rec->real;
    t.orient = classify_orientation(t.a, t.b);
    t.peripheral = !(t.cell_real[0] && t.cell_real[1]);
    tbus_.push_back(t);
    by_cells_[{t.cells[0], t.cells[1]}] = t.index;
    by_verts_[{t.a, t.b}] = t.index;
  }

  // Merge ports into nodes: ports of the two cell-boundary edges meeting at a
  // corner of a real cell become one non-floating node; ports facing a
  // notional cell stay single and float.
  std::map<std::pair<vertex_ref, cell_ref>, int> wedge_index;
  for (tbu& t : tbus_) {
    for (int end = 0; end < 2; ++end) {
      const vertex_ref v = end == 0 ? t.a : t.b;
      for (int side = 0; side < 2; ++side) {
        const int pid = port_id(t.index, end, side);
        int idx = -1;
        if (t.cell_real[side]) {
          auto [it, created] = wedge_index.insert({{v, t.cells[side]}, node_count()});
          idx = it->second;
          if (created) {
            node nd;
            nd.index = idx;
            nd.vertex = v;
            nd.wedge = t.cells[side];
            nodes_.push_back(nd);
          }
        } else {
          idx = node_count();
          node nd;
          nd.index = idx;
          nd.vertex = v;
          nd.wedge = t.cells[side];
          nd.floating = true;
          if (spec_.fam == family::square) {
            if (t.orient == orientation::horizontal)
              nd.side = static_cast<int>(t.cells[side].row == t.a.y ? side_label::top
                                                                    : side_label::bottom);
            else
              nd.side = static_cast<int>(t.cells[side].col == t.a.x ? side_label::left
                                                                    : side_label::right);
          }
          nodes_.push_back(nd);
        }
        node& nd = nodes_[idx];
        if (nd.ports[0] == -1) {
          nd.ports[0] = pid;
        } else if (nd.ports[1] == -1) {
          nd.ports[1] = pid;
        } else {
          throw std::logic_error("mesh builder: node of degree > 2 at wedge");
        }
        t.node[end * 2 + side] = idx;
      }
    }
  }

  for (const node& nd : nodes_) {
    if (!nd.floating && nd.ports[1] == -1)
      throw std::logic_error("mesh builder: interior wedge with a single port");
    if (nd.floating && nd.ports[1] != -1)
      throw std::logic_error("mesh builder: floating wedge with two ports");
  }

  peripheral_count_ = 0;
  for (const tbu& t : tbus_) {
    bool any_floating = false;
    for (int s = 0; s < 4; ++s) any_floating |= nodes_[t.node[s]].floating;
    if (any_floating != t.peripheral)
      throw std::logic_error("mesh builder: peripheral flag disagrees with node degrees");
    if (t.peripheral) ++peripheral_count_;
  }
}

void mesh_graph::assign_boundary_indices() {
  std::map<vertex_ref, std::vector<int>> badj;
  for (const tbu& t : tbus_)
    if (t.peripheral) {
      badj[t.a].push_back(t.index);
      badj[t.b].push_back(t.index);
    }
  for (const auto& [v, es] : badj)
    if (es.size() != 2)
      throw std::logic_error("mesh builder: boundary vertex without exactly two boundary edges");

  const vertex_ref start = badj.begin()->first;
  const auto& first_pair = badj.begin()->second;
  auto other_end = [&](int e, vertex_ref v) {
    return tbus_[e].a == v ? tbus_[e].b : tbus_[e].a;
  };
  int cur_e = first_pair[0];
  if (other_end(first_pair[1], start) < other_end(first_pair[0], start)) cur_e = first_pair[1];

  vertex_ref cur_v = start;
  int counter = 0;
  const int steps = peripheral_count_;
  for (int s = 0; s < steps; ++s) {
    tbu& t = tbus_[cur_e];
    const int notional_side = t.cell_real[0] ? 1 : 0;
    const int from_end = (cur_v == t.a) ? 0 : 1;
    node& n_from = nodes_[t.node[from_end * 2 + notional_side]];
    node& n_to = nodes_[t.node[(1 - from_end) * 2 + notional_side]];
    n_from.boundary_index = counter++;
    n_to.boundary_index = counter++;
    cur_v = other_end(cur_e, cur_v);
    const auto& es = badj.at(cur_v);
    cur_e = es[0] == cur_e ? es[1] : es[0];
  }
  if (cur_v != start)
    throw std::logic_error("mesh builder: boundary walk did not close");

  floating_.clear();
  for (const node& nd : nodes_)
    if (nd.floating) {
      if (nd.boundary_index < 0)
        throw std::logic_error("mesh builder: floating node missed by boundary walk");
      floating_.push_back(nd.index);
    }
  std::sort(floating_.begin(), floating_.end(), [this](int l, int r) {
    return nodes_[l].boundary_index < nodes_[r].boundary_index;
  });
}

void mesh_graph::check_counts() const {
  long long floating = 0;
  for (const node& nd : nodes_)
    if (nd.floating) ++floating;
  const long long nonfloating = node_count() - floating;
  if (tbu_count() != spec_.tbu_count() || floating != spec_.floating_count() ||
      nonfloating != spec_.nonfloating_count() ||
      peripheral_count_ != spec_.peripheral_tbu_count())
    throw std::logic_error("mesh builder: node/TBU counts disagree with the closed forms for " +
                           spec_.to_string());
}

int mesh_graph::find_tbu(cell_ref a, cell_ref b) const {
  auto it = by_cells_.find({std::min(a, b), std::max(a, b)});
  return it == by_cells_.end() ? -1 : it->second;
}

int mesh_graph::require_tbu(cell_ref a, cell_ref b) const {
  const int idx = find_tbu(a, b);
  if (idx < 0)
    fail(errc::unknown_tbu, "no TBU between cells (" + std::to_string(a.row) + "," +
                                std::to_string(a.col) + ") and (" + std::to_string(b.row) + "," +
                                std::to_string(b.col) + ") in " + spec_.to_string());
  return idx;
}

int mesh_graph::find_tbu_at(vertex_ref a, vertex_ref b) const {
  auto it = by_verts_.find({std::min(a, b), std::max(a, b)});
  return it == by_verts_.end() ? -1 : it->second;
}

bool mesh_graph::is_peripheral(int tbu_index) const {
  if (tbu_index < 0 || tbu_index >= tbu_count())
    fail(errc::unknown_tbu, "TBU index " + std::to_string(tbu_index) + " out of range");
  return tbus_[static_cast<size_t>(tbu_index)].peripheral;
}

}  // namespace ppmesh
