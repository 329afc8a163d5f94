// core/include/syncscore/assignment.h

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

#ifndef SYNCSCORE_ASSIGNMENT_H_
#define SYNCSCORE_ASSIGNMENT_H_

#include <vector>

namespace syncscore {

/// Square cost matrix, row-major: cost[i][j] = cost of assigning row i to
/// column j.
using CostMatrix = std::vector<std::vector<double>>;

/// Minimum-cost perfect assignment (Jonker-Volgenant style shortest
/// augmenting paths, O(n^3)). Returns row -> column.
std::vector<int> SolveAssignmentHungarian(const CostMatrix &cost);

/// Exhaustive minimum over all permutations; returns the lexicographically
/// smallest optimal mapping. Intended for n <= 8.
std::vector<int> SolveAssignmentExhaustive(const CostMatrix &cost);

/// Minimum-cost assignment with the lexicographically smallest mapping
/// among cost ties. Dispatches to the exhaustive search for n <= 6 and to
/// the Hungarian algorithm with lexicographic refinement beyond.
std::vector<int> SolveAssignment(const CostMatrix &cost);

double AssignmentCost(const CostMatrix &cost, const std::vector<int> &mapping);

}  // namespace syncscore

#endif  // SYNCSCORE_ASSIGNMENT_H_
