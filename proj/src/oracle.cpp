#include "ppmesh/oracle.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "ppmesh/theory.hpp"
#include "ppmesh/tracer.hpp"

namespace ppmesh {

namespace {

constexpr size_t kMaxCounterexamples = 8;

// Runs fn(index, config, part) over every configuration, one part accumulator
// per disjoint index range. Parts come back in range order, so "first in
// index order" witnesses survive any worker count.
template <typename Part, typename Fn>
std::vector<Part> parallel_sweep(const mesh_graph& mesh, const oracle_options& opt, Fn&& fn) {
  const config_space space(mesh, opt.cap_bits, opt.force);
  const auto ranges = split_range(space.size(), std::max(1, opt.jobs));
  std::vector<Part> parts(ranges.size());
  const auto run = [&](size_t i) {
    for (std::uint64_t k = ranges[i].first; k < ranges[i].second; ++k)
      fn(k, space.at(k), parts[i]);
  };
  if (ranges.size() == 1) {
    run(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(ranges.size());
    for (size_t i = 0; i < ranges.size(); ++i) workers.emplace_back(run, i);
    for (std::thread& w : workers) w.join();
  }
  return parts;
}

struct suite_part {
  std::uint64_t checked = 0;
  std::array<std::uint64_t, 5> violations{};
  std::array<std::vector<std::pair<std::uint64_t, std::string>>, 5> examples;

  void flag(int check, std::uint64_t index, const std::string& reason) {
    ++violations[static_cast<size_t>(check)];
    auto& ex = examples[static_cast<size_t>(check)];
    if (ex.size() < kMaxCounterexamples) ex.push_back({index, reason});
  }
};

}  // namespace

realizable_lengths_result oracle_realizable_lengths(const mesh_graph& mesh,
                                                    const oracle_options& opt) {
  using part_t = std::map<long long, std::uint64_t>;
  const auto parts = parallel_sweep<part_t>(
      mesh, opt, [&](std::uint64_t k, const configuration& c, part_t& part) {
        for (const traced_path& p : trace_all_paths(mesh, c).paths) {
          const auto [it, created] = part.insert({p.length, k});
          if (!created && k < it->second) it->second = k;
        }
      });

  part_t merged;
  for (const part_t& part : parts)
    for (const auto& [len, idx] : part) {
      const auto [it, created] = merged.insert({len, idx});
      if (!created && idx < it->second) it->second = idx;
    }

  realizable_lengths_result out;
  out.configs_swept = config_space(mesh, opt.cap_bits, opt.force).size();
  for (const auto& [len, idx] : merged) {
    out.lengths.push_back(len);
    out.witnesses[len] = configuration::from_index(mesh, idx).to_bits();
  }
  return out;
}

max_simultaneous_result oracle_max_simultaneous(const mesh_graph& mesh, long long x,
                                                const oracle_options& opt) {
  struct part_t {
    long long y = -1;
    std::uint64_t index = 0;
  };
  const auto parts = parallel_sweep<part_t>(
      mesh, opt, [&](std::uint64_t k, const configuration& c, part_t& part) {
        long long count = 0;
        for (const traced_path& p : trace_all_paths(mesh, c).paths)
          if (p.length == x) ++count;
        if (count > part.y) {
          part.y = count;
          part.index = k;
        }
      });

  part_t best;
  for (const part_t& part : parts)
    if (part.y > best.y) best = part;

  max_simultaneous_result out;
  out.configs_swept = config_space(mesh, opt.cap_bits, opt.force).size();
  out.y_true = std::max(best.y, 0LL);
  if (out.y_true > 0) out.witness_bits = configuration::from_index(mesh, best.index).to_bits();
  return out;
}

bool verify_report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const theorem_check& c) { return c.violations == 0; });
}

verify_report verify_theorem_suite(const mesh_graph& mesh, const oracle_options& opt) {
  const mesh_spec& spec = mesh.spec();
  const sum_spectrum spectrum = path_sum_spectrum(spec);
  const bool square = spec.fam == family::square;

  const auto parts = parallel_sweep<suite_part>(
      mesh, opt, [&](std::uint64_t k, const configuration& c, suite_part& part) {
        ++part.checked;
        const trace_result tr = trace_all_paths(mesh, c);

        if (static_cast<long long>(tr.paths.size()) != spec.path_count())
          part.flag(0, k, "traced " + std::to_string(tr.paths.size()) + " paths, expected " +
                              std::to_string(spec.path_count()));

        long long sum = 0, sum_sq = 0;
        for (const traced_path& p : tr.paths) {
          sum += p.length;
          sum_sq += static_cast<long long>(p.length) * p.length;
        }
        const bool sum_ok = spectrum.contains(sum);
        if (!sum_ok) part.flag(1, k, "path-length sum " + std::to_string(sum));

        if (square) {
          for (const traced_path& p : tr.paths) {
            const type_rule rule =
                type_constraints(spec, classify_path(mesh, p), path_start_side(mesh, p));
            if (std::count(rule.residues.begin(), rule.residues.end(), p.length % 4) == 0 ||
                p.length < rule.min_len || p.length > rule.max_len) {
              part.flag(2, k, "path of length " + std::to_string(p.length) +
                                  " breaks its type rule");
              break;
            }
          }
        }

        for (const closed_loop& l : tr.loops)
          if (l.length % spectrum.step != 0) {
            part.flag(3, k, "loop of length " + std::to_string(l.length));
            break;
          }

        if (sum_ok) {
          const long long k0 = (sum - spectrum.base) / spectrum.step;
          const stats_bound bound = stats_bounds(spec, k0);
          const long long count = static_cast<long long>(tr.paths.size());
          const rat64 mean(sum, count);
          const rat64 variance = rat64(sum_sq, count) - mean * mean;
          long long longest = 0;
          for (const traced_path& p : tr.paths) longest = std::max<long long>(longest, p.length);
          if (longest > bound.max_len)
            part.flag(4, k, "max length " + std::to_string(longest) + " exceeds " +
                                std::to_string(bound.max_len));
          else if (mean != bound.mean)
            part.flag(4, k, "mean off the closed form");
          else if (variance > bound.var_bound)
            part.flag(4, k, "variance above the extremal bound");
        }
      });

  verify_report out;
  out.checks = {
      {"path-count", "every configuration traces exactly " + std::to_string(spec.path_count()) +
                         " undirected paths",
       0, {}},
      {"sum-format", "path-length sums have the form " + std::to_string(spectrum.base) + " + " +
                         std::to_string(spectrum.step) + "*k with 0 <= k <= " +
                         std::to_string(spectrum.kmax),
       0, {}},
      {"type-residues", square ? "path types obey their residue and window rules"
                               : "not applicable off the square family",
       0, {}},
      {"loop-lengths", "untraveled loop lengths are divisible by " +
                           std::to_string(spectrum.step),
       0, {}},
      {"stats-bounds", "longest path and variance stay within the extremal bounds; "
                       "the mean matches the closed form exactly",
       0, {}},
  };

  std::array<std::vector<std::pair<std::uint64_t, std::string>>, 5> examples;
  for (const suite_part& part : parts) {
    out.configs_swept += part.checked;
    for (size_t i = 0; i < 5; ++i) {
      out.checks[i].violations += part.violations[i];
      for (const auto& ex : part.examples[i])
        if (examples[i].size() < kMaxCounterexamples) examples[i].push_back(ex);
    }
  }
  for (size_t i = 0; i < 5; ++i)
    for (const auto& [idx, reason] : examples[i])
      out.checks[i].counterexamples.push_back(
          configuration::from_index(mesh, idx).to_bits() + ": " + reason);
  return out;
}

}  // namespace ppmesh
