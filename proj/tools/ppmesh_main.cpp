// Command-line front end: every subcommand prints one JSON report on stdout;
// failures print {"error", "message"} on stderr and exit non-zero.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppmesh/characterization.hpp"
#include "ppmesh/configuration.hpp"
#include "ppmesh/constructor.hpp"
#include "ppmesh/errors.hpp"
#include "ppmesh/mesh.hpp"
#include "ppmesh/oracle.hpp"
#include "ppmesh/report.hpp"
#include "ppmesh/svg.hpp"
#include "ppmesh/theory.hpp"

namespace {

using ppmesh::error;
using ppmesh::errc;
using ppmesh::fail;
using ppmesh::mesh_graph;
using ppmesh::mesh_spec;
using ppmesh::ordered_json;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::invalid_argument, "cannot open " + path + " for writing");
  out << content;
  if (!out.flush()) fail(errc::invalid_argument, "failed writing " + path);
}

// --config accepts a bitstring or the name of a file whose first line is one.
ppmesh::configuration config_from_arg(const mesh_graph& mesh, const std::string& arg) {
  if (std::ifstream in(arg); in) {
    std::string bits;
    in >> bits;
    return ppmesh::configuration::from_bits(mesh, bits);
  }
  return ppmesh::configuration::from_bits(mesh, arg);
}

std::pair<long long, long long> parse_range(const std::string& text, long long max) {
  if (text.empty()) return {1, max};
  const auto sep = text.find("..");
  if (sep == std::string::npos)
    fail(errc::invalid_argument, "range must look like 1..25, got " + text);
  try {
    const long long lo = std::stoll(text.substr(0, sep));
    const long long hi = std::stoll(text.substr(sep + 2));
    if (lo < 1 || hi < lo) fail(errc::invalid_argument, "empty range " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    fail(errc::invalid_argument, "range must look like 1..25, got " + text);
  } catch (const std::out_of_range&) {
    fail(errc::invalid_argument, "range value out of range in " + text);
  }
}

void emit(const std::string& command, const mesh_spec* spec, ordered_json result) {
  std::cout << ppmesh::render_report(ppmesh::report_envelope(command, spec, std::move(result)));
}

struct cli_state {
  std::string mesh_text;
  std::string config_text;
  std::string svg_file;
  std::string csv_file;
  std::string range_text;
  std::string task;
  std::string measurements_file;
  std::string lambda_text;
  std::string grid_text;
  long long x = 0;
  int jobs = 1;
  bool all = false;
  bool simulate = false;
  bool square = false;
  double alpha = 0.99;
  double tbu_length = 100e-6;
  double noise = 0.0;
  std::uint64_t seed = 0;
  long long k0 = -1;
  double n_eff = 2.35;
  double wavelength = 1550e-9;
  double l_min = 90e-6;
  double l_max = 110e-6;
};

std::vector<long long> parse_lambda(const std::string& text) {
  std::vector<long long> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "bad length '" + item + "' in --lambda");
    }
  }
  if (out.empty()) fail(errc::invalid_argument, "--lambda needs at least one length");
  return out;
}

void run_trace(const cli_state& s) {
  const mesh_spec spec = mesh_spec::parse(s.mesh_text);
  const mesh_graph mesh(spec);
  const auto config = config_from_arg(mesh, s.config_text);
  ordered_json result = ppmesh::trace_result_json(mesh, config);
  if (!s.svg_file.empty()) {
    const auto traced = ppmesh::trace_all_paths(mesh, config);
    write_file(s.svg_file, ppmesh::render_mesh_svg(mesh, config, &traced));
    result["svg_file"] = s.svg_file;
  }
  emit("trace", &spec, std::move(result));
}

void run_realizable(const cli_state& s) {
  const mesh_spec spec = mesh_spec::parse(s.mesh_text);
  if (s.all)
    emit("realizable", &spec, ppmesh::realizable_all_json(spec));
  else
    emit("realizable", &spec, ppmesh::realizable_json(spec, s.x));
}

void run_construct(const cli_state& s) {
  const mesh_spec spec = mesh_spec::parse(s.mesh_text);
  const mesh_graph mesh(spec);
  ordered_json result = ppmesh::construct_json(mesh, s.x, s.svg_file);
  if (!s.svg_file.empty()) {
    const auto r = ppmesh::construct_single_path(mesh, s.x);
    const auto traced = ppmesh::trace_all_paths(mesh, r.config);
    write_file(s.svg_file, ppmesh::render_mesh_svg(mesh, r.config, &traced));
  }
  emit("construct", &spec, std::move(result));
}

void run_bounds(const cli_state& s) {
  const mesh_spec spec = mesh_spec::parse(s.mesh_text);
  const auto [lo, hi] = parse_range(s.range_text, ppmesh::max_path_length(spec));
  if (!s.csv_file.empty()) write_file(s.csv_file, ppmesh::bounds_csv(spec, lo, hi));
  emit("bounds", &spec, ppmesh::bounds_json(spec, lo, hi, s.csv_file));
}

void run_oracle(const cli_state& s) {
  const mesh_spec spec = mesh_spec::parse(s.mesh_text);
  const mesh_graph mesh(spec);
  ppmesh::oracle_options opt;
  opt.jobs = s.jobs;
  if (s.task == "lengths") {
    emit("oracle", &spec, ppmesh::oracle_lengths_json(oracle_realizable_lengths(mesh, opt)));
  } else if (s.task == "maxy") {
    emit("oracle", &spec,
         ppmesh::oracle_maxy_json(s.x, oracle_max_simultaneous(mesh, s.x, opt)));
  } else if (s.task == "verify") {
    emit("oracle", &spec, ppmesh::oracle_verify_json(verify_theorem_suite(mesh, opt)));
  } else {
    fail(errc::invalid_argument, "unknown oracle task '" + s.task + "'");
  }
}

void run_characterize(const cli_state& s) {
  const mesh_spec spec = mesh_spec::parse(s.mesh_text);
  const mesh_graph mesh(spec);

  ppmesh::measurement_set ms;
  if (s.simulate) {
    auto config = s.config_text.empty() ? ppmesh::configuration::all_cross(mesh)
                                        : config_from_arg(mesh, s.config_text);
    ppmesh::tbu_physical phys;
    phys.alpha = s.alpha;
    phys.length = s.tbu_length;
    phys.n_eff = s.n_eff;
    phys.omega = ppmesh::angular_frequency(s.wavelength);
    ppmesh::process_variation variation;
    variation.noise = s.noise;
    variation.noise_seed = s.seed;
    ms = simulate_measurements(mesh, config, phys, variation);
  } else if (!s.measurements_file.empty()) {
    ms = ppmesh::load_measurements_csv(s.measurements_file);
  } else {
    fail(errc::invalid_argument, "characterize needs --measurements or --simulate");
  }

  ppmesh::characterize_request req;
  req.k0 = s.k0;
  req.n_eff = s.n_eff;
  req.omega = ppmesh::angular_frequency(s.wavelength);
  req.l_min = s.l_min;
  req.l_max = s.l_max;
  emit("characterize", &spec, ppmesh::characterize_json(mesh, ms, req));
}

void run_advise(const cli_state& s) {
  const auto lengths = parse_lambda(s.lambda_text);
  if (s.square) {
    emit("advise", nullptr, ppmesh::advise_square_json(lengths));
  } else if (!s.grid_text.empty()) {
    const mesh_spec spec = mesh_spec::parse("square:" + s.grid_text);
    emit("advise", &spec, ppmesh::advise_grid_json(spec.rows, spec.cols, lengths));
  } else {
    emit("advise", nullptr, ppmesh::advise_frontier_json(lengths));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"programmable photonic mesh analysis"};
  app.require_subcommand(1);
  cli_state s;

  CLI::App* trace = app.add_subcommand("trace", "trace every path of a configuration");
  trace->add_option("--mesh", s.mesh_text, "mesh spec, e.g. square:2x3")->required();
  trace->add_option("--config", s.config_text, "bitstring or file containing one")
      ->required();
  trace->add_option("--svg", s.svg_file, "also draw the traced mesh");

  CLI::App* realizable =
      app.add_subcommand("realizable", "single-path length realizability");
  realizable->add_option("--mesh", s.mesh_text)->required();
  CLI::Option* rx = realizable->add_option("--x", s.x, "one length to check");
  realizable->add_flag("--all", s.all, "list every realizable length")->excludes(rx);

  CLI::App* construct =
      app.add_subcommand("construct", "build a configuration with one path of length x");
  construct->add_option("--mesh", s.mesh_text)->required();
  construct->add_option("--x", s.x)->required();
  construct->add_option("--svg", s.svg_file, "draw the result");

  CLI::App* bounds = app.add_subcommand("bounds", "simultaneous-path upper bounds");
  bounds->add_option("--mesh", s.mesh_text)->required();
  bounds->add_option("--x-range", s.range_text, "e.g. 1..25 (default: full)");
  bounds->add_option("--csv", s.csv_file, "write the curve as CSV");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive sweeps over all configs");
  oracle->add_option("--mesh", s.mesh_text)->required();
  oracle->add_option("--task", s.task, "lengths | maxy | verify")->required();
  oracle->add_option("--x", s.x, "target length for maxy");
  oracle->add_option("--jobs", s.jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* characterize =
      app.add_subcommand("characterize", "estimate loss and waveguide length");
  characterize->add_option("--mesh", s.mesh_text)->required();
  characterize->add_option("--measurements", s.measurements_file,
                           "CSV of start_node,end_node,length,re,im");
  characterize->add_flag("--simulate", s.simulate, "synthesize measurements instead");
  characterize->add_option("--config", s.config_text, "config for --simulate");
  characterize->add_option("--alpha", s.alpha, "per-TBU amplitude for --simulate");
  characterize->add_option("--tbu-length", s.tbu_length, "waveguide length (m)");
  characterize->add_option("--noise", s.noise, "relative measurement noise");
  characterize->add_option("--seed", s.seed, "noise seed");
  characterize->add_option("--k0", s.k0, "sum-format index (default: derived)");
  characterize->add_option("--n-eff", s.n_eff, "effective index");
  characterize->add_option("--wavelength", s.wavelength, "probe wavelength (m)");
  characterize->add_option("--l-min", s.l_min, "length search window lower edge (m)");
  characterize->add_option("--l-max", s.l_max, "length search window upper edge (m)");

  CLI::App* advise = app.add_subcommand("advise", "screen a desired length multiset");
  advise->add_option("--lambda", s.lambda_text, "comma-separated lengths")->required();
  CLI::Option* sq = advise->add_flag("--square", s.square, "minimal square size");
  advise->add_option("--grid", s.grid_text, "check one size, e.g. 2x3")->excludes(sq);

  try {
    app.parse(argc, argv);
    if (trace->parsed()) run_trace(s);
    if (realizable->parsed()) {
      if (!s.all && rx->count() == 0)
        fail(errc::invalid_argument, "realizable needs --x or --all");
      run_realizable(s);
    }
    if (construct->parsed()) run_construct(s);
    if (bounds->parsed()) run_bounds(s);
    if (oracle->parsed()) {
      if (s.task == "maxy" && oracle->get_option("--x")->count() == 0)
        fail(errc::invalid_argument, "oracle --task maxy needs --x");
      run_oracle(s);
    }
    if (characterize->parsed()) run_characterize(s);
    if (advise->parsed()) run_advise(s);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << ordered_json{{"error", "UsageError"}, {"message", e.what()}}.dump()
              << "\n";
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  } catch (const error& e) {
    std::cerr << ordered_json{{"error", ppmesh::errc_name(e.code())},
                              {"message", e.what()}}
                     .dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", "Internal"}, {"message", e.what()}}.dump()
              << "\n";
    return 1;
  }
  return 0;
}
