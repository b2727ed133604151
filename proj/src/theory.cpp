#include "ppmesh/theory.hpp"

#include <algorithm>

namespace ppmesh {

namespace {

long long edge_budget(const mesh_spec& spec) {
  const long long n = spec.rows, m = spec.cols;
  switch (spec.fam) {
    case family::square: return 4 * n * m;
    case family::hexagonal: return 6 * n * m;
    case family::triangular: return 3 * n * m;
  }
  return 0;
}

void require_positive_length(long long x) {
  if (x < 1) fail(errc::out_of_range, "path length must be at least 1, got " + std::to_string(x));
}

}  // namespace

long long max_path_length(const mesh_spec& spec) { return edge_budget(spec) + 1; }

realizability single_path_realizable(const mesh_spec& spec, long long x) {
  require_positive_length(x);
  const long long maxlen = max_path_length(spec);
  if (spec.fam != family::square)
    return x <= maxlen ? realizability{true, "full"} : realizability{};

  const long long n = spec.rows, m = spec.cols;
  if (x % 4 != 3) return x <= maxlen ? realizability{true, "full"} : realizability{};
  if (m % 2 == 1 && x >= 2 * m + 1 && x <= maxlen - 2 * m)
    return {true, "odd-cols-window"};
  if (n % 2 == 1 && x >= 2 * n + 1 && x <= maxlen - 2 * n)
    return {true, "odd-rows-window"};
  return {};
}

std::string unrealizable_reason(const mesh_spec& spec, long long x) {
  if (single_path_realizable(spec, x).ok) return "";
  const long long maxlen = max_path_length(spec);
  if (x > maxlen)
    return "length " + std::to_string(x) + " exceeds the maximum of " + std::to_string(maxlen) +
           " for " + spec.to_string();
  // Square residue-3 failures.
  if (spec.rows % 2 == 0 && spec.cols % 2 == 0)
    return "length " + std::to_string(x) +
           " is 3 (mod 4), which needs an odd mesh dimension; " + spec.to_string() +
           " has none";
  return "length " + std::to_string(x) + " is 3 (mod 4) and falls outside the realizable " +
         "windows of " + spec.to_string() + " (odd-cols window [" +
         std::to_string(2 * spec.cols + 1) + ", " + std::to_string(maxlen - 2 * spec.cols) +
         "] needs odd cols; odd-rows window [" + std::to_string(2 * spec.rows + 1) + ", " +
         std::to_string(maxlen - 2 * spec.rows) + "] needs odd rows)";
}

type_rule type_constraints(const mesh_spec& spec, path_type kind, side_label start) {
  if (spec.fam != family::square)
    fail(errc::unsupported_family,
         "path types are defined for square meshes only, not " + spec.to_string());
  const long long n = spec.rows, m = spec.cols, area = 4 * n * m;
  switch (kind) {
    case path_type::S: return {{1}, 1, area + 1};
    case path_type::A: return {{0, 2}, 2, area};
    case path_type::O: {
      const long long d =
          (start == side_label::left || start == side_label::right) ? m : n;
      const int residue = d % 2 == 1 ? 3 : 1;
      return {{residue}, 2 * d + 1, area - 2 * d + 1};
    }
  }
  return {};
}

multi_path_bound multi_path_upper_bound(const mesh_spec& spec, long long x) {
  require_positive_length(x);
  multi_path_bound b;
  b.x = x;
  b.count_component = spec.path_count();
  if (x > 1) b.floor_component = edge_budget(spec) / (x - 1);

  if (spec.fam == family::square) {
    if (x % 2 == 0) b.c1 = 4;
    if (x % 4 == 3 && !single_path_realizable(spec, x).ok) {
      b.c2 = 0;
      b.note = "no single path of length " + std::to_string(x) + " exists in " +
               spec.to_string();
    }
    if (x % 2 == 0 && (spec.rows < 2 * x || spec.cols < 2 * x)) {
      b.tightness_caveat = true;
      if (!b.note.empty()) b.note += "; ";
      b.note += "the even-length cap assumes both dimensions reach 2x and may overshoot here";
    }
  }

  b.y_max = b.count_component;
  b.active = "path-count";
  if (b.floor_component && *b.floor_component < b.y_max) {
    b.y_max = *b.floor_component;
    b.active = "floor";
  }
  if (b.c1 && *b.c1 < b.y_max) {
    b.y_max = *b.c1;
    b.active = "even-length-cap";
  }
  if (b.c2 && *b.c2 < b.y_max) {
    b.y_max = *b.c2;
    b.active = "not-realizable";
  }
  return b;
}

sum_spectrum path_sum_spectrum(const mesh_spec& spec) {
  const long long n = spec.rows, m = spec.cols;
  switch (spec.fam) {
    case family::square: return {2 * n + 2 * m, 4, n * m};
    case family::hexagonal: return {4 * n + 4 * m - 2, 6, n * m};
    case family::triangular: return {2 * n + m, 3, n * m};
  }
  return {};
}

stats_bound stats_bounds(const mesh_spec& spec, long long k0) {
  if (k0 < 0 || k0 > spec.cell_count())
    fail(errc::out_of_range, "k0 = " + std::to_string(k0) + " outside [0, " +
                                 std::to_string(spec.cell_count()) + "] for " + spec.to_string());
  const long long n = spec.rows, m = spec.cols;
  stats_bound out;
  switch (spec.fam) {
    case family::square: {
      const long long d = n + m;
      out.mean = rat64(d + 2 * k0, d);
      out.max_len = 4 * k0 + 1;
      out.var_bound = rat64(8 * k0 * k0, d) - rat64(4 * k0 * k0, d * d);
      break;
    }
    case family::hexagonal: {
      const long long d = 2 * n + 2 * m - 1;
      out.mean = rat64(d + 3 * k0, d);
      out.max_len = 6 * k0 + 1;
      out.var_bound = rat64(18 * k0 * k0, d) - rat64(9 * k0 * k0, d * d);
      break;
    }
    case family::triangular: {
      const long long d = 2 * n + m;
      out.mean = rat64(d + 3 * k0, d);
      out.max_len = 3 * k0 + 1;
      out.var_bound = rat64(9 * k0 * k0, d) - rat64(9 * k0 * k0, d * d);
      break;
    }
  }
  return out;
}

}  // namespace ppmesh
