#pragma once

#include <optional>
#include <vector>

#include "intbasis/linalg.hpp"

namespace intbasis {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status;
  RatVector point;  // meaningful for Optimal
  Rat value;        // meaningful for Optimal
};

// Exact two-phase simplex (Bland's rule) on equality-form problems
//   max c^T x  s.t.  A x = b,  x >= 0
// with rational data. Small and dense; meant for desk-scale instances.
LpSolution simplex_maximize(const std::vector<RatVector>& a_rows,
                            const RatVector& b, const RatVector& c);

// Phase 1 only: some x >= 0 with A x = b, or nullopt.
std::optional<RatVector> simplex_feasible_point(const std::vector<RatVector>& a_rows,
                                                const RatVector& b);

// Nonnegative rational combination of the generators equal to target,
// if one exists (exact cone-membership certificate).
std::optional<RatVector> nonneg_combination(const std::vector<IntVector>& generators,
                                            const RatVector& target);

// Integer vector c with c . g >= 1 for every generator; exists iff the cone
// generated by the (nonzero) generators is pointed.
std::optional<IntVector> strict_separator(const std::vector<IntVector>& generators);

}  // namespace intbasis
