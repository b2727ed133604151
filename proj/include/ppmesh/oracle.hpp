#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppmesh/configuration.hpp"
#include "ppmesh/mesh.hpp"

namespace ppmesh {

// Exhaustive sweeps over every configuration of a small mesh. All results are
// deterministic and independent of the worker count: workers consume disjoint
// index ranges and merge with associative operations, and every witness is
// the first one in index order.

struct oracle_options {
  int jobs = 1;
  int cap_bits = kDefaultEnumCapBits;
  bool force = false;  // allow sweeps above the cap
};

struct realizable_lengths_result {
  std::vector<long long> lengths;                // sorted ascending
  std::map<long long, std::string> witnesses;    // length -> earliest bitstring
  std::uint64_t configs_swept = 0;
};

realizable_lengths_result oracle_realizable_lengths(const mesh_graph& mesh,
                                                    const oracle_options& opt = {});

struct max_simultaneous_result {
  long long y_true = 0;
  std::string witness_bits;  // empty when y_true is 0
  std::uint64_t configs_swept = 0;
};

max_simultaneous_result oracle_max_simultaneous(const mesh_graph& mesh, long long x,
                                                const oracle_options& opt = {});

struct theorem_check {
  std::string name;
  std::string statement;
  std::uint64_t violations = 0;
  std::vector<std::string> counterexamples;  // earliest few, "bits: reason"
};

struct verify_report {
  std::uint64_t configs_swept = 0;
  std::vector<theorem_check> checks;

  bool all_pass() const;
};

// Re-checks the path-count, sum-format, residue/window, loop-length and
// statistics-bound rules on every configuration.
verify_report verify_theorem_suite(const mesh_graph& mesh, const oracle_options& opt = {});

}  // namespace ppmesh
