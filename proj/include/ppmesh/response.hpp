#pragma once

#include <complex>

#include "ppmesh/configuration.hpp"
#include "ppmesh/tracer.hpp"

namespace ppmesh {

using complexd = std::complex<double>;

inline constexpr double kLightSpeed = 299792458.0;  // m/s

// omega for a vacuum wavelength in meters
double angular_frequency(double wavelength);

// Physical parameters of one TBU. Defaults are the values used throughout the
// characterization fixtures: 100 um waveguides at 1550 nm.
struct tbu_physical {
  double alpha = 0.99;    // amplitude transmission, (0, 1]
  double length = 100e-6; // waveguide length, meters
  double n_eff = 2.35;    // effective index at omega
  double omega = angular_frequency(1550e-9);  // rad/s

  void validate() const;  // throws invalid_argument
  // alpha * e^{-j omega n_eff length / c}, the per-traversal factor
  complexd propagation() const;
};

struct phase_settings {
  double theta = 0.0;
  double phi = 0.0;

  static phase_settings bar();    // (0, pi)
  static phase_settings cross();  // (-pi/2, -pi/2)
};

struct transfer_matrix {
  complexd m00, m01, m10, m11;
};

// The 2x2 TBU transfer matrix at arbitrary phase settings,
//   0.5 * [ e^{-j theta} - e^{-j phi}    -j(e^{-j theta} + e^{-j phi}) ]
//         [ -j(e^{-j theta} + e^{-j phi})   -e^{-j theta} + e^{-j phi} ]
// scaled by alpha e^{-j omega n_eff L / c}. Bar reduces to diag(1, -1) times
// the scale, cross to antidiag(1, 1) times the scale.
transfer_matrix tbu_transfer(const phase_settings& ph, const tbu_physical& phys);

// b * (-1)^q * (alpha e^{-j omega n_eff L / c})^l
complexd path_response(complexd b, long long l, int q, const tbu_physical& phys);

// Number of bar-state TBU traversals mod 2, counted once per traversal (a TBU
// crossed twice contributes twice).
int bar_parity(const traced_path& path, const configuration& config);

}  // namespace ppmesh
