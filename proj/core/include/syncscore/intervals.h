// core/include/syncscore/intervals.h

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

#ifndef SYNCSCORE_INTERVALS_H_
#define SYNCSCORE_INTERVALS_H_

#include <vector>

namespace syncscore {

/// Half-open time interval [begin, end), in seconds.
struct Interval {
  double begin = 0.0;
  double end = 0.0;
  double Length() const { return end - begin; }
  bool operator==(const Interval &) const = default;
};

/// A set of intervals. Functions below expect and return normalized sets:
/// sorted by begin, pairwise disjoint, every interval non-empty.
using IntervalSet = std::vector<Interval>;

/// Sorts, drops empty intervals and merges overlapping/touching ones.
IntervalSet Normalize(IntervalSet set);

IntervalSet Union(const IntervalSet &a, const IntervalSet &b);
IntervalSet Intersect(const IntervalSet &a, const IntervalSet &b);
/// Set difference a \ b.
IntervalSet Subtract(const IntervalSet &a, const IntervalSet &b);

double TotalLength(const IntervalSet &set);

}  // namespace syncscore

#endif  // SYNCSCORE_INTERVALS_H_
