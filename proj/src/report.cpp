#include "ppmesh/report.hpp"

#include <sstream>

#include "ppmesh/constructor.hpp"
#include "ppmesh/errors.hpp"

namespace ppmesh {

ordered_json report_envelope(const std::string& command, const mesh_spec* spec,
                             ordered_json result) {
  ordered_json j;
  j["schema"] = kReportSchemaId;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  if (spec)
    j["mesh"] = spec->to_string();
  else
    j["mesh"] = nullptr;
  j["result"] = std::move(result);
  return j;
}

std::string render_report(const ordered_json& report) { return report.dump(2) + "\n"; }

ordered_json rational_json(const rat64& r) {
  std::string exact = std::to_string(r.numerator());
  if (r.denominator() != 1) exact += "/" + std::to_string(r.denominator());
  return {{"exact", exact},
          {"value", boost::rational_cast<double>(r)}};
}

ordered_json path_json(const mesh_graph& mesh, const traced_path& p) {
  ordered_json j;
  j["start"] = p.start_node();
  j["end"] = p.end_node();
  j["length"] = p.length;
  j["bar_traversals"] = p.bar_traversals;
  if (mesh.spec().fam == family::square)
    j["type"] = path_type_name(classify_path(mesh, p));
  j["nodes"] = p.nodes;
  j["tbus"] = p.tbu_seq;
  return j;
}

ordered_json loop_json(const closed_loop& l) {
  return {{"length", l.length}, {"nodes", l.nodes}, {"tbus", l.tbu_seq}};
}

ordered_json trace_result_json(const mesh_graph& mesh, const configuration& config) {
  const trace_result traced = trace_all_paths(mesh, config);
  const path_stats stats = compute_path_stats(mesh, traced.paths);

  ordered_json j;
  j["config"] = config.to_bits();
  j["cross_count"] = config.cross_count();
  j["path_count"] = traced.paths.size();
  j["loop_count"] = traced.loops.size();
  j["paths"] = ordered_json::array();
  for (const traced_path& p : traced.paths) j["paths"].push_back(path_json(mesh, p));
  j["loops"] = ordered_json::array();
  for (const closed_loop& l : traced.loops) j["loops"].push_back(loop_json(l));
  j["stats"] = {{"lengths", stats.lengths},
                {"sum", stats.sum},
                {"k0", stats.k0},
                {"max", stats.max},
                {"mean", rational_json(stats.mean)},
                {"variance", rational_json(stats.variance)}};
  return j;
}

ordered_json realizable_json(const mesh_spec& spec, long long x) {
  const realizability r = single_path_realizable(spec, x);
  ordered_json j;
  j["x"] = x;
  j["realizable"] = r.ok;
  if (r.ok) {
    j["witness_set"] = r.witness_set;
    j["reason"] = nullptr;
  } else {
    j["witness_set"] = nullptr;
    j["reason"] = unrealizable_reason(spec, x);
  }
  return j;
}

ordered_json realizable_all_json(const mesh_spec& spec) {
  const long long max = max_path_length(spec);
  std::vector<long long> lengths;
  for (long long x = 1; x <= max; ++x)
    if (single_path_realizable(spec, x).ok) lengths.push_back(x);
  ordered_json j;
  j["max_length"] = max;
  j["count"] = lengths.size();
  j["realizable_lengths"] = lengths;
  return j;
}

ordered_json construct_json(const mesh_graph& mesh, long long x,
                            const std::string& svg_file) {
  const construct_result r = construct_single_path(mesh, x);
  ordered_json j;
  j["x"] = x;
  j["config"] = r.config.to_bits();
  j["cross_count"] = r.config.cross_count();
  j["path"] = path_json(mesh, r.path);
  if (svg_file.empty())
    j["svg_file"] = nullptr;
  else
    j["svg_file"] = svg_file;
  return j;
}

namespace {

ordered_json opt_json(const std::optional<long long>& v) {
  if (v) return *v;
  return nullptr;
}

std::string opt_csv(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "inf";
}

}  // namespace

ordered_json bounds_row_json(const multi_path_bound& b) {
  ordered_json j;
  j["x"] = b.x;
  j["floor_component"] = opt_json(b.floor_component);
  j["count_component"] = b.count_component;
  j["C1"] = opt_json(b.c1);
  j["C2"] = opt_json(b.c2);
  j["y_bound"] = b.y_max;
  j["active"] = b.active;
  j["caveat"] = b.tightness_caveat;
  j["note"] = b.note;
  return j;
}

ordered_json bounds_json(const mesh_spec& spec, long long x_lo, long long x_hi,
                         const std::string& csv_file) {
  ordered_json j;
  j["x_range"] = {x_lo, x_hi};
  if (csv_file.empty())
    j["csv_file"] = nullptr;
  else
    j["csv_file"] = csv_file;
  j["rows"] = ordered_json::array();
  for (long long x = x_lo; x <= x_hi; ++x)
    j["rows"].push_back(bounds_row_json(multi_path_upper_bound(spec, x)));
  return j;
}

std::string bounds_csv(const mesh_spec& spec, long long x_lo, long long x_hi) {
  std::ostringstream out;
  out << "x,floor_component,count_component,C1,C2,y_bound\n";
  for (long long x = x_lo; x <= x_hi; ++x) {
    const multi_path_bound b = multi_path_upper_bound(spec, x);
    out << b.x << ',' << opt_csv(b.floor_component) << ',' << b.count_component << ','
        << opt_csv(b.c1) << ',' << opt_csv(b.c2) << ',' << b.y_max << '\n';
  }
  return out.str();
}

ordered_json oracle_lengths_json(const realizable_lengths_result& r) {
  ordered_json j;
  j["lengths"] = r.lengths;
  j["count"] = r.lengths.size();
  j["witnesses"] = ordered_json::object();
  for (const auto& [len, bits] : r.witnesses)
    j["witnesses"][std::to_string(len)] = bits;
  j["configs_swept"] = r.configs_swept;
  return j;
}

ordered_json oracle_maxy_json(long long x, const max_simultaneous_result& r) {
  ordered_json j;
  j["x"] = x;
  j["y_true"] = r.y_true;
  if (r.witness_bits.empty())
    j["witness"] = nullptr;
  else
    j["witness"] = r.witness_bits;
  j["configs_swept"] = r.configs_swept;
  return j;
}

ordered_json oracle_verify_json(const verify_report& r) {
  ordered_json j;
  j["configs_swept"] = r.configs_swept;
  j["all_pass"] = r.all_pass();
  j["checks"] = ordered_json::array();
  for (const theorem_check& c : r.checks)
    j["checks"].push_back({{"name", c.name},
                           {"statement", c.statement},
                           {"violations", c.violations},
                           {"counterexamples", c.counterexamples}});
  return j;
}

ordered_json characterize_json(const mesh_graph& mesh, const measurement_set& ms,
                               const characterize_request& req) {
  long long sum = 0;
  for (const measurement& m : ms) sum += m.length;

  long long k0 = req.k0;
  if (k0 < 0) {
    const sum_spectrum spectrum = path_sum_spectrum(mesh.spec());
    if (!spectrum.contains(sum))
      fail(errc::inconsistent_k, "measured path-length sum " + std::to_string(sum) +
                                     " does not fit the spectrum of " +
                                     mesh.spec().to_string());
    k0 = (sum - spectrum.base) / spectrum.step;
  }

  const double alpha = estimate_alpha(ms, mesh, k0);
  const std::vector<double> cands =
      estimate_length(ms, mesh, req.n_eff, req.omega, k0, req.l_min, req.l_max);

  ordered_json j;
  j["measurement_count"] = ms.size();
  j["path_length_sum"] = sum;
  j["k0"] = k0;
  j["alpha_hat"] = alpha;
  j["length_estimation"] = {
      {"n_eff", req.n_eff},
      {"omega", req.omega},
      {"window", {req.l_min, req.l_max}},
      {"candidate_spacing", length_candidate_spacing(mesh, req.n_eff, req.omega, k0)},
      {"candidate_count", cands.size()},
      {"candidates", cands}};
  return j;
}

namespace {

ordered_json violations_json(const std::vector<constraint_violation>& vs) {
  ordered_json arr = ordered_json::array();
  for (const constraint_violation& v : vs)
    arr.push_back({{"constraint", v.constraint}, {"detail", v.detail}});
  return arr;
}

}  // namespace

ordered_json feasibility_json(const feasibility_report& r) {
  ordered_json j;
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["verdict"] = feasibility_verdict_name(r.verdict);
  j["violations"] = violations_json(r.violations);
  j["notes"] = r.notes;
  return j;
}

ordered_json advise_grid_json(int rows, int cols, const std::vector<long long>& lengths) {
  ordered_json j;
  j["lengths"] = lengths;
  j["report"] = feasibility_json(check_feasibility(rows, cols, lengths));
  return j;
}

ordered_json advise_square_json(const std::vector<long long>& lengths) {
  const square_size_result r = minimal_square_size(lengths);
  ordered_json j;
  j["lengths"] = lengths;
  j["minimal_square"] = r.size;
  j["binding_at_previous"] = violations_json(r.binding_at_previous);
  j["report"] = feasibility_json(check_feasibility(r.size, r.size, lengths));
  return j;
}

ordered_json advise_frontier_json(const std::vector<long long>& lengths) {
  const frontier_result r = minimal_sizes(lengths);
  ordered_json j;
  j["lengths"] = lengths;
  j["frontier"] = ordered_json::array();
  for (const auto& [n, m] : r.sizes) j["frontier"].push_back({n, m});
  j["notes"] = r.notes;
  return j;
}

}  // namespace ppmesh
