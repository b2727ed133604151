#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ppmesh/errors.hpp"

namespace ppmesh {

enum class family { square, hexagonal, triangular };

const char* family_name(family f);
family family_from_string(const std::string& s);

// Lattice-vertex position in integer drawing coordinates (x right, y down).
// Ordering is by (y, x) so "smaller" means closer to the top-left corner.
struct vertex_ref {
  int x = 0;
  int y = 0;

  friend bool operator==(const vertex_ref&, const vertex_ref&) = default;
  friend std::strong_ordering operator<=>(const vertex_ref& a, const vertex_ref& b) {
    return std::tie(a.y, a.x) <=> std::tie(b.y, b.x);
  }
};

// Cell address. Real cells have row in [1,N]; the builder also uses addresses
// just outside that range for the notional neighbours of boundary TBUs.
// For triangular meshes col counts both up and down triangles along a row.
struct cell_ref {
  int row = 0;
  int col = 0;

  friend bool operator==(const cell_ref&, const cell_ref&) = default;
  friend std::strong_ordering operator<=>(const cell_ref& a, const cell_ref& b) {
    return std::tie(a.row, a.col) <=> std::tie(b.row, b.col);
  }
};

enum class orientation { horizontal, vertical, diag_down, diag_up };

enum class side_label { left, right, top, bottom };

const char* side_label_name(side_label s);

struct mesh_spec {
  family fam = family::square;
  int rows = 1;  // N
  int cols = 1;  // M

  void validate() const;

  long long cell_count() const;
  long long tbu_count() const;
  long long peripheral_tbu_count() const;
  long long floating_count() const;
  long long nonfloating_count() const;
  long long path_count() const;  // floating_count() / 2

  std::string to_string() const;                  // "square:2x3"
  static mesh_spec parse(const std::string& s);   // accepts "square:NxM", "hex:NxM", "tri:NxM"
};

// A TBU sits on one lattice edge. Its four ports are addressed by
// (end, side): end 0/1 = smaller/larger endpoint, side 0/1 = the cell the
// port faces (cells[0] < cells[1]). Port slot = end*2 + side.
struct tbu {
  int index = -1;
  vertex_ref a, b;                    // endpoints, a < b
  std::array<cell_ref, 2> cells{};    // adjacent cells, cells[0] < cells[1]
  std::array<bool, 2> cell_real{};
  orientation orient = orientation::horizontal;
  bool peripheral = false;
  std::array<int, 4> node{-1, -1, -1, -1};  // node index per port slot

  std::string name() const;  // "(1,0)-(1,1)" cell-pair tag
};

// A node is a wedge of a cell at one of its corners: the two cell-boundary
// edges meeting at that corner each contribute one port. Wedges of notional
// cells hold a single port and are the floating nodes (external mesh ports).
struct node {
  int index = -1;
  vertex_ref vertex{};
  cell_ref wedge{};  // the cell this node faces
  bool floating = false;
  std::array<int, 2> ports{-1, -1};  // global port ids, ports[1] = -1 if floating
  int side = -1;                     // side_label for square floating nodes
  int boundary_index = -1;           // position in the boundary walk (floating only)

  bool has_side() const { return side >= 0; }
  side_label side_of() const { return static_cast<side_label>(side); }
};

class mesh_graph {
 public:
  explicit mesh_graph(mesh_spec spec);

  const mesh_spec& spec() const { return spec_; }
  const std::vector<tbu>& tbus() const { return tbus_; }
  const std::vector<node>& nodes() const { return nodes_; }
  int tbu_count() const { return static_cast<int>(tbus_.size()); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int peripheral_count() const { return peripheral_count_; }
  int floating_count() const { return static_cast<int>(floating_.size()); }

  // Floating node indices ordered by boundary_index.
  const std::vector<int>& floating_nodes() const { return floating_; }

  // Lookup by adjacent cell pair (order-insensitive); -1 when absent.
  int find_tbu(cell_ref a, cell_ref b) const;
  // Same, but throws unknown_tbu when absent.
  int require_tbu(cell_ref a, cell_ref b) const;
  int find_tbu_at(vertex_ref a, vertex_ref b) const;

  bool is_peripheral(int tbu_index) const;

  // Global port ids: 4*tbu + end*2 + side.
  static int port_id(int tbu_index, int end, int side) { return 4 * tbu_index + end * 2 + side; }
  static int port_tbu(int port) { return port / 4; }
  static int port_end(int port) { return (port % 4) / 2; }
  static int port_side(int port) { return port % 2; }

  // Corner polygon of a (possibly notional) cell, clockwise in screen coords.
  std::vector<vertex_ref> cell_polygon(cell_ref c) const;
  // Neighbour cell across edge slot k of cell c (slots follow cell_polygon order).
  cell_ref neighbor_cell(cell_ref c, int slot) const;
  bool cell_is_real(cell_ref c) const;
  std::vector<cell_ref> cells() const;

 private:
  void build();
  void assign_boundary_indices();
  void check_counts() const;

  mesh_spec spec_;
  std::vector<tbu> tbus_;
  std::vector<node> nodes_;
  std::vector<int> floating_;
  std::map<std::pair<cell_ref, cell_ref>, int> by_cells_;
  std::map<std::pair<vertex_ref, vertex_ref>, int> by_verts_;
  int peripheral_count_ = 0;
};

}  // namespace ppmesh
