#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ppmesh/mesh.hpp"

namespace ppmesh {

// Screens a desired multiset of path lengths against the necessary conditions
// for an N x M square mesh. Passing means no implemented necessary condition
// is violated; it is never a sufficiency claim.

enum class feasibility_verdict { fails_necessary, passes_necessary };

const char* feasibility_verdict_name(feasibility_verdict v);

struct constraint_violation {
  std::string constraint;  // stable machine-readable name
  std::string detail;      // the numbers that broke it
};

struct feasibility_report {
  int rows = 0;
  int cols = 0;
  feasibility_verdict verdict = feasibility_verdict::fails_necessary;
  std::vector<constraint_violation> violations;  // every violation, not just the first
  std::vector<std::string> notes;                // skipped checks, scaling remark

  bool passed() const { return verdict == feasibility_verdict::passes_necessary; }
};

// Constraint names, in evaluation order:
//   max-path-length            every x <= 4NM+1
//   path-sum-capacity          sum of lengths <= 2N+2M+4NM
//   path-count                 multiset size <= 2N+2M
//   per-length-realizability   each x individually realizable on N x M
//   even-length-multiplicity   at most 4 copies of an even x; only checked
//                              when min(N, M) >= 2x, otherwise skipped + noted
//   mean-format                when the multiset uses all 2N+2M paths, its sum
//                              must equal 2N+2M+4k for an integer k in [0, NM]
feasibility_report check_feasibility(int rows, int cols,
                                     const std::vector<long long>& lengths);

struct square_size_result {
  int size = 0;  // minimal x with check_feasibility(x, x, lengths) passing
  std::vector<constraint_violation> binding_at_previous;  // empty when size == 1
};

square_size_result minimal_square_size(const std::vector<long long>& lengths,
                                       int size_cap = 64);

struct frontier_result {
  std::vector<std::pair<int, int>> sizes;  // Pareto-minimal passing (N, M), ascending
  std::vector<std::string> notes;          // observed non-monotonic passes
};

frontier_result minimal_sizes(const std::vector<long long>& lengths, int rows_cap = 64,
                              int cols_cap = 64);

}  // namespace ppmesh
