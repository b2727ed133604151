#include "ppmesh/response.hpp"

#include <cmath>
#include <numbers>

#include "ppmesh/errors.hpp"

namespace ppmesh {

namespace {
constexpr complexd kJ{0.0, 1.0};
}

double angular_frequency(double wavelength) {
  if (!(wavelength > 0)) fail(errc::invalid_argument, "wavelength must be positive");
  return 2.0 * std::numbers::pi * kLightSpeed / wavelength;
}

void tbu_physical::validate() const {
  if (!(alpha > 0) || alpha > 1.0)
    fail(errc::invalid_argument, "alpha must lie in (0, 1]");
  if (!(length > 0)) fail(errc::invalid_argument, "length must be positive");
  if (!(n_eff > 0)) fail(errc::invalid_argument, "n_eff must be positive");
  if (!(omega > 0)) fail(errc::invalid_argument, "omega must be positive");
}

complexd tbu_physical::propagation() const {
  return alpha * std::exp(-kJ * (omega * n_eff * length / kLightSpeed));
}

phase_settings phase_settings::bar() { return {0.0, std::numbers::pi}; }

phase_settings phase_settings::cross() {
  return {-0.5 * std::numbers::pi, -0.5 * std::numbers::pi};
}

transfer_matrix tbu_transfer(const phase_settings& ph, const tbu_physical& phys) {
  phys.validate();
  const complexd et = std::exp(-kJ * ph.theta);
  const complexd ep = std::exp(-kJ * ph.phi);
  const complexd scale = 0.5 * phys.propagation();
  const complexd off = -kJ * (et + ep) * scale;
  return {(et - ep) * scale, off, off, (-et + ep) * scale};
}

complexd path_response(complexd b, long long l, int q, const tbu_physical& phys) {
  phys.validate();
  if (l < 1) fail(errc::invalid_argument, "path length must be at least 1");
  if (q != 0 && q != 1) fail(errc::invalid_argument, "parity must be 0 or 1");
  const double sign = q ? -1.0 : 1.0;
  return b * sign * std::pow(phys.propagation(), static_cast<double>(l));
}

int bar_parity(const traced_path& path, const configuration& config) {
  int bars = 0;
  for (int t : path.tbu_seq)
    if (config.state(t) == tbu_state::bar) ++bars;
  return bars % 2;
}

}  // namespace ppmesh
