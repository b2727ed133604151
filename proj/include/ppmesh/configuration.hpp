#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ppmesh/mesh.hpp"

namespace ppmesh {

enum class tbu_state : std::uint8_t { bar, cross };

// One bar/cross assignment per TBU. Encodable as a bitstring in canonical TBU
// order ('0' = bar, '1' = cross, TBU 0 first, so the string is the MSB-first
// binary form of the configuration index).
class configuration {
 public:
  configuration(const mesh_graph& mesh, tbu_state fill);

  static configuration all_bar(const mesh_graph& mesh);
  static configuration all_cross(const mesh_graph& mesh);
  static configuration from_bits(const mesh_graph& mesh, const std::string& bits);
  static configuration from_index(const mesh_graph& mesh, std::uint64_t index);
  // All bar except the listed TBU indices.
  static configuration from_cross_set(const mesh_graph& mesh, const std::vector<int>& crossed);

  const mesh_graph& mesh() const { return *mesh_; }
  tbu_state state(int tbu_index) const { return states_[static_cast<size_t>(tbu_index)]; }
  void set(int tbu_index, tbu_state s) { states_[static_cast<size_t>(tbu_index)] = s; }
  void set_cells(cell_ref a, cell_ref b, tbu_state s);
  int size() const { return static_cast<int>(states_.size()); }
  int cross_count() const;

  std::string to_bits() const;
  std::uint64_t to_index() const;  // only when #TBU <= 63

  friend bool operator==(const configuration&, const configuration&) = default;

 private:
  const mesh_graph* mesh_;
  std::vector<tbu_state> states_;
};

inline constexpr int kDefaultEnumCapBits = 24;

// The full configuration space of a mesh, addressable by index so workers can
// consume disjoint index ranges.
class config_space {
 public:
  explicit config_space(const mesh_graph& mesh, int cap_bits = kDefaultEnumCapBits,
                        bool force = false);

  const mesh_graph& mesh() const { return *mesh_; }
  std::uint64_t size() const { return size_; }
  configuration at(std::uint64_t index) const;

 private:
  const mesh_graph* mesh_;
  std::uint64_t size_;
};

// Splits [0, total) into at most `parts` contiguous, disjoint, covering ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total, int parts);

}  // namespace ppmesh
