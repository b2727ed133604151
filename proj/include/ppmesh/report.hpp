#pragma once

#include <string>

#include "json.hpp"
#include "ppmesh/advisor.hpp"
#include "ppmesh/characterization.hpp"
#include "ppmesh/oracle.hpp"
#include "ppmesh/theory.hpp"
#include "ppmesh/tracer.hpp"

namespace ppmesh {

// Every command emits the same envelope:
//   {schema, tool_version, command, mesh, result}
// with insertion-ordered keys so identical inputs give byte-identical output.

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchemaId = "ppmesh-report/1";

// mesh == nullptr renders the mesh field as null (commands without one).
ordered_json report_envelope(const std::string& command, const mesh_spec* spec,
                             ordered_json result);

// Two-space indent plus trailing newline; the only serialization used.
std::string render_report(const ordered_json& report);

// Exact rational as {"exact": "p/q", "value": double}.
ordered_json rational_json(const rat64& r);

ordered_json path_json(const mesh_graph& mesh, const traced_path& p);
ordered_json loop_json(const closed_loop& l);

// trace: every path and loop of one configuration plus exact statistics.
ordered_json trace_result_json(const mesh_graph& mesh, const configuration& config);

// realizable --x
ordered_json realizable_json(const mesh_spec& spec, long long x);
// realizable --all
ordered_json realizable_all_json(const mesh_spec& spec);

// construct (svg_file empty = no diagram written)
ordered_json construct_json(const mesh_graph& mesh, long long x,
                            const std::string& svg_file);

ordered_json bounds_row_json(const multi_path_bound& b);
ordered_json bounds_json(const mesh_spec& spec, long long x_lo, long long x_hi,
                         const std::string& csv_file);
// Columns: x,floor_component,count_component,C1,C2,y_bound ("inf" when inactive).
std::string bounds_csv(const mesh_spec& spec, long long x_lo, long long x_hi);

ordered_json oracle_lengths_json(const realizable_lengths_result& r);
ordered_json oracle_maxy_json(long long x, const max_simultaneous_result& r);
ordered_json oracle_verify_json(const verify_report& r);

struct characterize_request {
  long long k0 = -1;  // -1 = derive from the measured path-length sum
  double n_eff = 2.35;
  double omega = angular_frequency(1550e-9);
  double l_min = 90e-6;
  double l_max = 110e-6;
};

ordered_json characterize_json(const mesh_graph& mesh, const measurement_set& ms,
                               const characterize_request& req);

ordered_json feasibility_json(const feasibility_report& r);
ordered_json advise_grid_json(int rows, int cols, const std::vector<long long>& lengths);
ordered_json advise_square_json(const std::vector<long long>& lengths);
ordered_json advise_frontier_json(const std::vector<long long>& lengths);

}  // namespace ppmesh
