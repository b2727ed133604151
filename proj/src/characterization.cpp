#include "ppmesh/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ppmesh/constructor.hpp"
#include "ppmesh/errors.hpp"
#include "ppmesh/theory.hpp"

namespace ppmesh {

namespace {

constexpr complexd kJ{0.0, 1.0};

void check_per_tbu(const std::vector<double>& v, int tbu_count, const char* what,
                   bool unit_interval) {
  if (v.empty()) return;
  if (static_cast<int>(v.size()) != tbu_count)
    fail(errc::invalid_argument, std::string(what) + " map must have one entry per TBU");
  for (double x : v) {
    if (unit_interval ? (!(x > 0) || x > 1.0) : !(x > 0))
      fail(errc::invalid_argument, std::string(what) + " entries must lie in " +
                (unit_interval ? "(0, 1]" : "(0, inf)"));
  }
}

// Validates the set against the mesh and the claimed k0; returns the path sum.
long long checked_path_sum(const measurement_set& ms, const mesh_graph& mesh,
                           long long k0) {
  if (ms.empty()) fail(errc::empty_measurements, "no measurements");
  if (static_cast<long long>(ms.size()) != mesh.spec().path_count())
    fail(errc::inconsistent_k, "expected one measurement per path (" +
                                    std::to_string(mesh.spec().path_count()) +
                                    "), got " + std::to_string(ms.size()));
  const sum_spectrum spectrum = path_sum_spectrum(mesh.spec());
  if (k0 < 0 || k0 > spectrum.kmax)
    fail(errc::inconsistent_k, "k0 " + std::to_string(k0) + " outside [0, " +
                                    std::to_string(spectrum.kmax) + "]");
  long long sum = 0;
  for (const measurement& m : ms) sum += m.length;
  if (sum != spectrum.value(k0))
    fail(errc::inconsistent_k, "measured path sum " + std::to_string(sum) + " but k0 " +
              std::to_string(k0) + " implies " + std::to_string(spectrum.value(k0)));
  return sum;
}

}  // namespace

void process_variation::validate(int tbu_count) const {
  check_per_tbu(alpha, tbu_count, "alpha", true);
  check_per_tbu(length, tbu_count, "length", false);
  if (noise < 0) fail(errc::invalid_argument, "noise must be nonnegative");
}

measurement_set simulate_measurements(const mesh_graph& mesh, const configuration& config,
                                      const tbu_physical& base,
                                      const process_variation& variation) {
  base.validate();
  variation.validate(mesh.tbu_count());
  const trace_result traced = trace_all_paths(mesh, config);

  measurement_set out;
  out.reserve(traced.paths.size());
  std::mt19937_64 rng(variation.noise_seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (const traced_path& p : traced.paths) {
    complexd r = bar_parity(p, config) ? -1.0 : 1.0;
    for (int t : p.tbu_seq) {
      const double a = variation.alpha.empty() ? base.alpha : variation.alpha[t];
      const double len = variation.length.empty() ? base.length : variation.length[t];
      r *= a * std::exp(-kJ * (base.omega * base.n_eff * len / kLightSpeed));
    }
    if (variation.noise > 0)
      r *= (1.0 + variation.noise * unit(rng)) *
           std::exp(kJ * (variation.noise * unit(rng)));
    out.push_back({p.start_node(), p.end_node(), p.length, r});
  }
  return out;
}

double estimate_alpha(const measurement_set& ms, const mesh_graph& mesh, long long k0) {
  const long long sum = checked_path_sum(ms, mesh, k0);
  double log_sum = 0.0;
  for (const measurement& m : ms) log_sum += std::log(std::abs(m.ratio));
  return std::exp(log_sum / static_cast<double>(sum));
}

std::vector<double> estimate_length(const measurement_set& ms, const mesh_graph& mesh,
                                    double n_eff, double omega, long long k0,
                                    double l_min, double l_max) {
  if (!(n_eff > 0) || !(omega > 0))
    fail(errc::invalid_argument, "n_eff and omega must be positive");
  if (!(l_min <= l_max))
    fail(errc::invalid_argument, "window must satisfy l_min <= l_max");
  const long long sum = checked_path_sum(ms, mesh, k0);

  double phase_sum = 0.0;
  for (const measurement& m : ms) phase_sum += std::arg(m.ratio);

  // L(d) = (-phase_sum + 2 pi d) * c / (sum * omega * n_eff), increasing in d.
  const double scale = static_cast<double>(sum) * omega * n_eff / kLightSpeed;
  const double two_pi = 2.0 * std::numbers::pi;
  const long long d_lo =
      static_cast<long long>(std::ceil((l_min * scale + phase_sum) / two_pi));
  const long long d_hi =
      static_cast<long long>(std::floor((l_max * scale + phase_sum) / two_pi));
  if (d_lo > d_hi)
    fail(errc::no_candidate_in_window, "no length candidate in [" + std::to_string(l_min) + ", " +
              std::to_string(l_max) + "]");
  std::vector<double> candidates;
  candidates.reserve(static_cast<size_t>(d_hi - d_lo + 1));
  for (long long d = d_lo; d <= d_hi; ++d)
    candidates.push_back((-phase_sum + two_pi * static_cast<double>(d)) / scale);
  return candidates;
}

double length_candidate_spacing(const mesh_graph& mesh, double n_eff, double omega,
                                long long k0) {
  const sum_spectrum spectrum = path_sum_spectrum(mesh.spec());
  if (k0 < 0 || k0 > spectrum.kmax)
    fail(errc::out_of_range, "k0 outside [0, kmax]");
  return 2.0 * std::numbers::pi * kLightSpeed /
         (static_cast<double>(spectrum.value(k0)) * omega * n_eff);
}

namespace {

// A valid pair is one non-peripheral TBU plus a partner that every path
// traverses equally often, so scaling one by b and the other by 1/b leaves
// every per-path product unchanged.
std::pair<int, int> find_equal_traversal_pair(const mesh_graph& mesh,
                                              const configuration& config) {
  const trace_result traced = trace_all_paths(mesh, config);
  const size_t paths = traced.paths.size();
  std::vector<std::vector<int>> hits(static_cast<size_t>(mesh.tbu_count()),
                                     std::vector<int>(paths, 0));
  for (size_t p = 0; p < paths; ++p)
    for (int t : traced.paths[p].tbu_seq) ++hits[static_cast<size_t>(t)][p];

  for (int i = 0; i < mesh.tbu_count(); ++i) {
    const auto& hi = hits[static_cast<size_t>(i)];
    if (mesh.is_peripheral(i)) continue;
    if (std::all_of(hi.begin(), hi.end(), [](int h) { return h == 0; })) continue;
    for (int j = 0; j < mesh.tbu_count(); ++j)
      if (j != i && hits[static_cast<size_t>(j)] == hi) return {i, j};
  }
  return {-1, -1};
}

}  // namespace

ambiguity_demo demonstrate_alpha_ambiguity(const mesh_graph& mesh,
                                           const tbu_physical& base, double factor) {
  base.validate();
  if (!(factor > 0) || base.alpha * factor > 1.0 || !(base.alpha / factor <= 1.0))
    fail(errc::invalid_argument, "factor must keep both scaled alphas in (0, 1]");
  if (mesh.tbu_count() == mesh.peripheral_count())
    fail(errc::no_interior_tbu, mesh.spec().to_string() + " has no non-peripheral TBU");

  // The full snake traverses its entry TBU and every cell-separator TBU
  // exactly twice each and leaves them off every other path, so any two of
  // them can trade loss unnoticed. Triangular meshes have no snake recipe and
  // fall back to scanning configurations.
  std::vector<configuration> candidates;
  if (mesh.spec().fam != family::triangular)
    candidates.push_back(construct_single_path(mesh, max_path_length(mesh.spec())).config);
  candidates.push_back(configuration::all_cross(mesh));

  std::uint64_t scanned = 0;
  if (mesh.tbu_count() <= kDefaultEnumCapBits) scanned = config_space(mesh).size();
  for (std::uint64_t k = 0; k < scanned; ++k)
    candidates.push_back(configuration::from_index(mesh, k));

  for (const configuration& config : candidates) {
    const auto [i, j] = find_equal_traversal_pair(mesh, config);
    if (i < 0) continue;
    process_variation first;
    first.alpha.assign(static_cast<size_t>(mesh.tbu_count()), base.alpha);
    process_variation second = first;
    second.alpha[static_cast<size_t>(i)] *= factor;
    second.alpha[static_cast<size_t>(j)] /= factor;
    return {config, i, j, factor, std::move(first), std::move(second)};
  }
  fail(errc::unsupported_family,
       "no configuration of " + mesh.spec().to_string() +
           " exposes an equally-traversed TBU pair within the scan cap");
}

measurement_set read_measurements_csv(std::istream& in) {
  measurement_set out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("start_node", 0) == 0) continue;
    std::istringstream row(line);
    measurement m;
    char c1, c2, c3, c4;
    double re = 0, im = 0;
    if (!(row >> m.start_node >> c1 >> m.end_node >> c2 >> m.length >> c3 >> re >>
          c4 >> im) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',')
      fail(errc::invalid_argument, "malformed measurement CSV at line " + std::to_string(lineno));
    m.ratio = {re, im};
    out.push_back(m);
  }
  return out;
}

measurement_set load_measurements_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open " + path);
  return read_measurements_csv(in);
}

void write_measurements_csv(std::ostream& out, const measurement_set& ms) {
  out << "start_node,end_node,length,re,im\n";
  out.precision(17);
  for (const measurement& m : ms)
    out << m.start_node << ',' << m.end_node << ',' << m.length << ','
        << m.ratio.real() << ',' << m.ratio.imag() << '\n';
}

}  // namespace ppmesh
