#include "ppmesh/configuration.hpp"

#include <algorithm>

namespace ppmesh {

configuration::configuration(const mesh_graph& mesh, tbu_state fill)
    : mesh_(&mesh), states_(static_cast<size_t>(mesh.tbu_count()), fill) {}

configuration configuration::all_bar(const mesh_graph& mesh) {
  return configuration(mesh, tbu_state::bar);
}

configuration configuration::all_cross(const mesh_graph& mesh) {
  return configuration(mesh, tbu_state::cross);
}

configuration configuration::from_bits(const mesh_graph& mesh, const std::string& bits) {
  if (static_cast<int>(bits.size()) != mesh.tbu_count())
    fail(errc::length_mismatch, "configuration for " + mesh.spec().to_string() + " needs " +
                                    std::to_string(mesh.tbu_count()) + " bits, got " +
                                    std::to_string(bits.size()));
  configuration c(mesh, tbu_state::bar);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      c.states_[i] = tbu_state::cross;
    else if (bits[i] != '0')
      fail(errc::length_mismatch,
           "configuration bitstring may only contain '0' and '1', got '" +
               std::string(1, bits[i]) + "'");
  }
  return c;
}

configuration configuration::from_index(const mesh_graph& mesh, std::uint64_t index) {
  const int n = mesh.tbu_count();
  configuration c(mesh, tbu_state::bar);
  for (int i = 0; i < n; ++i)
    if (index >> (n - 1 - i) & 1u) c.states_[static_cast<size_t>(i)] = tbu_state::cross;
  return c;
}

configuration configuration::from_cross_set(const mesh_graph& mesh,
                                            const std::vector<int>& crossed) {
  configuration c(mesh, tbu_state::bar);
  for (const int t : crossed) {
    if (t < 0 || t >= mesh.tbu_count())
      fail(errc::unknown_tbu, "TBU index " + std::to_string(t) + " out of range");
    c.states_[static_cast<size_t>(t)] = tbu_state::cross;
  }
  return c;
}

void configuration::set_cells(cell_ref a, cell_ref b, tbu_state s) {
  set(mesh_->require_tbu(a, b), s);
}

int configuration::cross_count() const {
  return static_cast<int>(std::count(states_.begin(), states_.end(), tbu_state::cross));
}

std::string configuration::to_bits() const {
  std::string bits(states_.size(), '0');
  for (size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == tbu_state::cross) bits[i] = '1';
  return bits;
}

std::uint64_t configuration::to_index() const {
  const int n = size();
  if (n > 63) fail(errc::too_large, "configuration index does not fit in 64 bits");
  std::uint64_t v = 0;
  for (int i = 0; i < n; ++i)
    if (states_[static_cast<size_t>(i)] == tbu_state::cross) v |= std::uint64_t{1} << (n - 1 - i);
  return v;
}

config_space::config_space(const mesh_graph& mesh, int cap_bits, bool force) : mesh_(&mesh) {
  const int n = mesh.tbu_count();
  if (!force && n > cap_bits)
    fail(errc::too_large, "enumerating " + mesh.spec().to_string() + " means 2^" +
                              std::to_string(n) + " configurations, above the cap of 2^" +
                              std::to_string(cap_bits) + " (raise the cap to force)");
  if (n > 62) fail(errc::too_large, "configuration space of 2^" + std::to_string(n) +
                                        " cannot be indexed");
  size_ = std::uint64_t{1} << n;
}

configuration config_space::at(std::uint64_t index) const {
  return configuration::from_index(*mesh_, index);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total, int parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (parts < 1) parts = 1;
  const std::uint64_t p = static_cast<std::uint64_t>(parts);
  const std::uint64_t chunk = total / p, extra = total % p;
  std::uint64_t begin = 0;
  for (std::uint64_t i = 0; i < p && begin < total; ++i) {
    const std::uint64_t len = chunk + (i < extra ? 1 : 0);
    out.push_back({begin, begin + len});
    begin += len;
  }
  return out;
}

}  // namespace ppmesh
