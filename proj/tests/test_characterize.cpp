#include "ppmesh/characterization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ppmesh/constructor.hpp"
#include "ppmesh/errors.hpp"
#include "ppmesh/theory.hpp"

using namespace ppmesh;

namespace {

process_variation random_variation(const mesh_graph& g, std::uint64_t seed,
                                   double alpha_lo, double alpha_hi, double len_lo,
                                   double len_hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> da(alpha_lo, alpha_hi);
  std::uniform_real_distribution<double> dl(len_lo, len_hi);
  process_variation v;
  for (int t = 0; t < g.tbu_count(); ++t) {
    v.alpha.push_back(da(rng));
    v.length.push_back(dl(rng));
  }
  return v;
}

// Traversal-weighted means over the paths of a configuration.
std::vector<long long> traversal_weights(const mesh_graph& g, const configuration& c) {
  std::vector<long long> w(static_cast<size_t>(g.tbu_count()), 0);
  for (const traced_path& p : trace_all_paths(g, c).paths)
    for (int t : p.tbu_seq) ++w[static_cast<size_t>(t)];
  return w;
}

}  // namespace

TEST_CASE("uniform loss round-trips exactly through the estimator") {
  for (const mesh_spec spec : {mesh_spec{family::square, 2, 2},
                               {family::square, 1, 3},
                               {family::hexagonal, 1, 1},
                               {family::triangular, 1, 2}}) {
    CAPTURE(spec.to_string());
    const mesh_graph g(spec);
    tbu_physical phys;
    phys.alpha = 0.99;
    const measurement_set ms = simulate_measurements(g, configuration::all_cross(g), phys);
    CHECK(static_cast<long long>(ms.size()) == spec.path_count());
    const double ahat = estimate_alpha(ms, g, spec.cell_count());
    CHECK(ahat == doctest::Approx(0.99).epsilon(1e-12));
  }
}

TEST_CASE("per-TBU loss variation estimates the traversal-weighted geometric mean") {
  const mesh_graph g({family::square, 2, 2});
  const configuration cross = configuration::all_cross(g);
  const process_variation v = random_variation(g, 7, 0.98, 1.0, 100e-6, 100e-6);

  const double ahat = estimate_alpha(simulate_measurements(g, cross, {}, v), g, 4);

  const std::vector<long long> w = traversal_weights(g, cross);
  double log_mean = 0;
  long long total = 0;
  for (int t = 0; t < g.tbu_count(); ++t) {
    CHECK(w[static_cast<size_t>(t)] == 2);  // all-cross touches both arms
    log_mean += static_cast<double>(w[static_cast<size_t>(t)]) *
                std::log(v.alpha[static_cast<size_t>(t)]);
    total += w[static_cast<size_t>(t)];
  }
  CHECK(ahat == doctest::Approx(std::exp(log_mean / static_cast<double>(total)))
                    .epsilon(1e-9));
}

TEST_CASE("a local configuration estimates only what its paths traverse") {
  const mesh_graph g({family::square, 2, 2});
  const configuration local = construct_single_path(g, 5).config;  // one cell used
  process_variation v;
  v.alpha.assign(static_cast<size_t>(g.tbu_count()), 0.5);
  const std::vector<long long> w = traversal_weights(g, local);
  double log_mean = 0;
  long long total = 0;
  for (int t = 0; t < g.tbu_count(); ++t) {
    if (w[static_cast<size_t>(t)] == 0) v.alpha[static_cast<size_t>(t)] = 0.99;
    log_mean += static_cast<double>(w[static_cast<size_t>(t)]) *
                std::log(v.alpha[static_cast<size_t>(t)]);
    total += w[static_cast<size_t>(t)];
  }
  CHECK(total == 12);  // paths sum 2N+2M+4 when one cell is consumed

  const double ahat = estimate_alpha(simulate_measurements(g, local, {}, v), g, 1);
  CHECK(ahat == doctest::Approx(std::exp(log_mean / 12.0)).epsilon(1e-12));
  // untraversed TBUs never influenced the estimate
  CHECK(std::abs(ahat - 0.99) > 0.1);
}

TEST_CASE("the estimators reject inconsistent inputs") {
  const mesh_graph g({family::square, 2, 2});
  const measurement_set ms = simulate_measurements(g, configuration::all_cross(g), {});

  CHECK_THROWS_AS(estimate_alpha({}, g, 4), error);
  try {
    estimate_alpha(ms, g, 3);
    FAIL("expected inconsistent_k");
  } catch (const error& e) {
    CHECK(e.code() == errc::inconsistent_k);
  }
  try {
    measurement_set short_set(ms.begin(), ms.end() - 1);
    estimate_alpha(short_set, g, 4);
    FAIL("expected inconsistent_k");
  } catch (const error& e) {
    CHECK(e.code() == errc::inconsistent_k);
  }
}

TEST_CASE("uniform length round-trips through the phase estimator") {
  const mesh_graph g({family::square, 2, 2});
  const tbu_physical phys;  // L = 100 um, 1550 nm, n_eff 2.35
  const measurement_set ms = simulate_measurements(g, configuration::all_cross(g), phys);

  const auto cands = estimate_length(ms, g, phys.n_eff, phys.omega, 4, 90e-6, 110e-6);
  int exact = 0;
  for (double c : cands)
    if (std::abs(c - phys.length) <= 1e-9 * phys.length) ++exact;
  CHECK(exact == 1);

  const double spacing = length_candidate_spacing(g, phys.n_eff, phys.omega, 4);
  CHECK(spacing == doctest::Approx(2 * std::numbers::pi * kLightSpeed /
                                   (24 * phys.omega * phys.n_eff))
                       .epsilon(1e-12));
  for (size_t i = 1; i < cands.size(); ++i)
    CHECK(cands[i] - cands[i - 1] == doctest::Approx(spacing).epsilon(1e-9));

  // a window lodged between two candidates is empty
  const auto nearest = std::find_if(cands.begin(), cands.end(), [&](double c) {
    return std::abs(c - phys.length) <= 1e-9 * phys.length;
  });
  REQUIRE(nearest != cands.end());
  CHECK_THROWS_AS(estimate_length(ms, g, phys.n_eff, phys.omega, 4,
                                  *nearest + 0.2 * spacing, *nearest + 0.8 * spacing),
                  error);
}

TEST_CASE("per-TBU length variation estimates the traversal-weighted mean") {
  const mesh_graph g({family::square, 2, 2});
  const tbu_physical phys;
  const configuration cross = configuration::all_cross(g);
  const process_variation v = random_variation(g, 11, 0.99, 0.99, 99e-6, 101e-6);
  const measurement_set ms = simulate_measurements(g, cross, phys, v);

  const std::vector<long long> w = traversal_weights(g, cross);
  double expected = 0;
  long long total = 0;
  for (int t = 0; t < g.tbu_count(); ++t) {
    expected += static_cast<double>(w[static_cast<size_t>(t)]) *
                v.length[static_cast<size_t>(t)];
    total += w[static_cast<size_t>(t)];
  }
  expected /= static_cast<double>(total);

  const auto cands = estimate_length(ms, g, phys.n_eff, phys.omega, 4, 90e-6, 110e-6);
  int hits = 0;
  for (double c : cands)
    if (std::abs(c - expected) <= 1e-9 * expected) ++hits;
  CHECK(hits == 1);
}

TEST_CASE("measurement noise is seeded and reproducible") {
  const mesh_graph g({family::square, 2, 2});
  process_variation noisy;
  noisy.noise = 1e-3;
  noisy.noise_seed = 42;
  const auto a = simulate_measurements(g, configuration::all_cross(g), {}, noisy);
  const auto b = simulate_measurements(g, configuration::all_cross(g), {}, noisy);
  CHECK(a == b);
  noisy.noise_seed = 43;
  const auto c = simulate_measurements(g, configuration::all_cross(g), {}, noisy);
  CHECK(a != c);
  const auto clean = simulate_measurements(g, configuration::all_cross(g), {});
  CHECK(std::abs(a[0].ratio - clean[0].ratio) > 0);
  CHECK(std::abs(a[0].ratio - clean[0].ratio) < 5e-3);
}

TEST_CASE("two loss maps can be indistinguishable") {
  for (const mesh_spec spec : {mesh_spec{family::square, 2, 2},
                               {family::square, 1, 2},
                               {family::hexagonal, 2, 2},
                               {family::triangular, 1, 2}}) {
    CAPTURE(spec.to_string());
    const mesh_graph g(spec);
    const ambiguity_demo demo = demonstrate_alpha_ambiguity(g, {}, 1.01);
    CHECK(!g.is_peripheral(demo.scaled_up_tbu));
    CHECK(demo.first.alpha != demo.second.alpha);

    const measurement_set a = simulate_measurements(g, demo.config, {}, demo.first);
    const measurement_set b = simulate_measurements(g, demo.config, {}, demo.second);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(std::abs(a[i].ratio - b[i].ratio) < 1e-12);
  }
}

TEST_CASE("meshes without interior TBUs cannot demonstrate the ambiguity") {
  try {
    demonstrate_alpha_ambiguity(mesh_graph({family::square, 1, 1}));
    FAIL("expected no_interior_tbu");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_interior_tbu);
  }
  const ambiguity_demo degenerate =
      demonstrate_alpha_ambiguity(mesh_graph({family::square, 2, 2}), {}, 1.0);
  CHECK(degenerate.first.alpha == degenerate.second.alpha);
}

TEST_CASE("measurements survive a CSV round-trip") {
  const mesh_graph g({family::square, 2, 3});
  const measurement_set ms =
      simulate_measurements(g, construct_single_path(g, 13).config, {});
  std::stringstream buffer;
  write_measurements_csv(buffer, ms);
  CHECK(read_measurements_csv(buffer) == ms);

  std::istringstream bad("start_node,end_node,length,re,im\n1,2,nonsense\n");
  CHECK_THROWS_AS(read_measurements_csv(bad), error);
}
