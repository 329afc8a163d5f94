// core/src/assignment.cc

// Copyright 2026  Syncscore Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "syncscore/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "syncscore/error.h"

namespace syncscore {

namespace {

void CheckSquare(const CostMatrix &cost) {
  const std::size_t n = cost.size();
  for (const auto &row : cost) {
    if (row.size() != n)
      throw ArgumentError("assignment: cost matrix must be square");
    for (const double v : row) {
      if (!std::isfinite(v))
        throw ArgumentError("assignment: cost entries must be finite");
    }
  }
}

}  // namespace

double AssignmentCost(const CostMatrix &cost, const std::vector<int> &mapping) {
  double total = 0.0;
  for (std::size_t i = 0; i < mapping.size(); ++i)
    total += cost[i][static_cast<std::size_t>(mapping[i])];
  return total;
}

std::vector<int> SolveAssignmentHungarian(const CostMatrix &cost) {
  CheckSquare(cost);
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  constexpr double kInf = std::numeric_limits<double>::max() / 4;

  // Shortest augmenting paths over the dual-feasible reduced costs;
  // 1-based with a dummy column 0.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> result(n, -1);
  for (int j = 1; j <= n; ++j) {
    if (match[j] > 0) result[match[j] - 1] = j - 1;
  }
  return result;
}

std::vector<int> SolveAssignmentExhaustive(const CostMatrix &cost) {
  CheckSquare(cost);
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  double best_cost = AssignmentCost(cost, perm);
  // next_permutation walks in lexicographic order, so keeping strictly
  // better candidates leaves the lexicographically smallest tie winner.
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double c = AssignmentCost(cost, perm);
    if (c < best_cost) {
      best_cost = c;
      best = perm;
    }
  }
  return best;
}

std::vector<int> SolveAssignment(const CostMatrix &cost) {
  const int n = static_cast<int>(cost.size());
  if (n <= 6) return SolveAssignmentExhaustive(cost);

  const std::vector<int> base = SolveAssignmentHungarian(cost);
  const double best_cost = AssignmentCost(cost, base);
  const double eps = 1e-9 * (1.0 + std::abs(best_cost));

  // Refine to the lexicographically smallest mapping among cost ties: fix
  // each row to the smallest column that still admits an optimal completion.
  std::vector<int> result(n, -1);
  std::vector<char> used(n, 0);
  double fixed_cost = 0.0;
  for (int r = 0; r < n; ++r) {
    bool placed = false;
    for (int c = 0; c < n && !placed; ++c) {
      if (used[c]) continue;
      // Optimal completion for rows r+1.. over the remaining columns.
      std::vector<int> free_cols;
      for (int j = 0; j < n; ++j) {
        if (!used[j] && j != c) free_cols.push_back(j);
      }
      double completion = 0.0;
      if (!free_cols.empty()) {
        CostMatrix sub(free_cols.size(),
                       std::vector<double>(free_cols.size()));
        for (std::size_t i = 0; i < free_cols.size(); ++i) {
          for (std::size_t j = 0; j < free_cols.size(); ++j)
            sub[i][j] = cost[static_cast<std::size_t>(r) + 1 + i]
                            [static_cast<std::size_t>(free_cols[j])];
        }
        completion = AssignmentCost(sub, SolveAssignmentHungarian(sub));
      }
      const double total = fixed_cost + cost[r][c] + completion;
      if (total <= best_cost + eps) {
        result[r] = c;
        used[c] = 1;
        fixed_cost += cost[r][c];
        placed = true;
      }
    }
    if (!placed) throw Error("SolveAssignment: refinement failed");
  }
  return result;
}

}  // namespace syncscore
