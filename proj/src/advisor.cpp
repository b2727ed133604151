#include "ppmesh/advisor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ppmesh/theory.hpp"

namespace ppmesh {

namespace {

void validate_lengths(const std::vector<long long>& lengths) {
  if (lengths.empty())
    fail(errc::invalid_argument, "the length multiset must be nonempty");
  for (long long x : lengths)
    if (x < 1)
      fail(errc::invalid_argument,
           "every requested length must be at least 1, got " + std::to_string(x));
}

std::map<long long, long long> tally(const std::vector<long long>& lengths) {
  std::map<long long, long long> counts;
  for (long long x : lengths) ++counts[x];
  return counts;
}

}  // namespace

const char* feasibility_verdict_name(feasibility_verdict v) {
  return v == feasibility_verdict::passes_necessary ? "passes_necessary"
                                                    : "fails_necessary";
}

feasibility_report check_feasibility(int rows, int cols,
                                     const std::vector<long long>& lengths) {
  validate_lengths(lengths);
  const mesh_spec spec{family::square, rows, cols};
  spec.validate();

  feasibility_report report;
  report.rows = rows;
  report.cols = cols;

  const long long maxlen = max_path_length(spec);
  const long long sum_cap = spec.path_count() + 4 * spec.cell_count();
  const long long path_cap = spec.path_count();
  const long long sum = std::accumulate(lengths.begin(), lengths.end(), 0LL);
  const auto counts = tally(lengths);

  for (const auto& [x, count] : counts)
    if (x > maxlen)
      report.violations.push_back(
          {"max-path-length",
           std::to_string(x) + " > " + std::to_string(maxlen) + " on " + spec.to_string()});

  if (sum > sum_cap)
    report.violations.push_back(
        {"path-sum-capacity",
         "sum " + std::to_string(sum) + " > " + std::to_string(sum_cap)});

  if (static_cast<long long>(lengths.size()) > path_cap)
    report.violations.push_back(
        {"path-count", std::to_string(lengths.size()) + " lengths > " +
                           std::to_string(path_cap) + " paths"});

  for (const auto& [x, count] : counts)
    if (x <= maxlen && !single_path_realizable(spec, x).ok)
      report.violations.push_back(
          {"per-length-realizability", unrealizable_reason(spec, x)});

  for (const auto& [x, count] : counts) {
    if (x % 2 != 0 || count <= 4) continue;
    if (std::min(rows, cols) >= 2 * x) {
      report.violations.push_back(
          {"even-length-multiplicity", "even length " + std::to_string(x) +
                                           " requested " + std::to_string(count) +
                                           " times, cap is 4"});
    } else {
      report.notes.push_back(
          "even length " + std::to_string(x) + " requested " + std::to_string(count) +
          " times; the 4-copy cap only applies when min(N, M) >= " +
          std::to_string(2 * x) + ", so it is not checked here");
    }
  }

  if (static_cast<long long>(lengths.size()) == path_cap) {
    const long long excess = sum - spec.path_count();
    if (excess < 0 || excess % 4 != 0 || excess / 4 > spec.cell_count()) {
      std::ostringstream mean;
      mean << static_cast<double>(sum) / static_cast<double>(lengths.size());
      report.violations.push_back(
          {"mean-format", "all " + std::to_string(path_cap) +
                              " paths are used but the mean " + mean.str() +
                              " is not 1 + 2k/(N+M) for an integer k in [0, " +
                              std::to_string(spec.cell_count()) + "]"});
    }
  }

  const long long g = std::accumulate(lengths.begin(), lengths.end(), 0LL,
                                      [](long long a, long long b) { return std::gcd(a, b); });
  if (g > 1)
    report.notes.push_back(
        "all lengths share the factor " + std::to_string(g) +
        ": scaling the TBU waveguide length by " + std::to_string(g) +
        " reproduces the same responses from the divided lengths, but the divided "
        "multiset has its own realizability constraints");

  report.verdict = report.violations.empty() ? feasibility_verdict::passes_necessary
                                             : feasibility_verdict::fails_necessary;
  return report;
}

square_size_result minimal_square_size(const std::vector<long long>& lengths,
                                       int size_cap) {
  validate_lengths(lengths);
  if (size_cap < 1) fail(errc::invalid_argument, "size cap must be at least 1");
  std::vector<constraint_violation> previous;
  for (int x = 1; x <= size_cap; ++x) {
    feasibility_report r = check_feasibility(x, x, lengths);
    if (r.passed()) return {x, std::move(previous)};
    previous = std::move(r.violations);
  }
  fail(errc::no_size_within_cap, "no square size up to " + std::to_string(size_cap) +
                                     "x" + std::to_string(size_cap) +
                                     " passes every necessary condition");
}

frontier_result minimal_sizes(const std::vector<long long>& lengths, int rows_cap,
                              int cols_cap) {
  validate_lengths(lengths);
  if (rows_cap < 1 || cols_cap < 1)
    fail(errc::invalid_argument, "size caps must be at least 1");

  std::vector<std::vector<bool>> passes(static_cast<size_t>(rows_cap) + 1,
                                        std::vector<bool>(static_cast<size_t>(cols_cap) + 1, false));
  for (int n = 1; n <= rows_cap; ++n)
    for (int m = 1; m <= cols_cap; ++m)
      passes[static_cast<size_t>(n)][static_cast<size_t>(m)] =
          check_feasibility(n, m, lengths).passed();

  frontier_result out;
  int best = cols_cap + 1;
  for (int n = 1; n <= rows_cap; ++n) {
    for (int m = 1; m <= cols_cap; ++m) {
      if (!passes[static_cast<size_t>(n)][static_cast<size_t>(m)]) continue;
      if (m < best) {
        out.sizes.emplace_back(n, m);
        best = m;
      }
      break;
    }
  }
  if (out.sizes.empty())
    fail(errc::empty_frontier, "no mesh up to " + std::to_string(rows_cap) + "x" +
                                   std::to_string(cols_cap) +
                                   " passes every necessary condition");

  constexpr size_t kMaxNotes = 8;
  for (int n = 1; n <= rows_cap && out.notes.size() < kMaxNotes; ++n) {
    for (int m = 1; m <= cols_cap && out.notes.size() < kMaxNotes; ++m) {
      if (!passes[static_cast<size_t>(n)][static_cast<size_t>(m)]) continue;
      if (n < rows_cap && !passes[static_cast<size_t>(n) + 1][static_cast<size_t>(m)])
        out.notes.push_back("passes at " + std::to_string(n) + "x" + std::to_string(m) +
                            " but not at " + std::to_string(n + 1) + "x" +
                            std::to_string(m) + " (a realizability window moved)");
      if (m < cols_cap && !passes[static_cast<size_t>(n)][static_cast<size_t>(m) + 1])
        out.notes.push_back("passes at " + std::to_string(n) + "x" + std::to_string(m) +
                            " but not at " + std::to_string(n) + "x" +
                            std::to_string(m + 1) + " (a realizability window moved)");
    }
  }
  return out;
}

}  // namespace ppmesh
