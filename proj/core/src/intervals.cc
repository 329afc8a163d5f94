// core/src/intervals.cc

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

#include "syncscore/intervals.h"

#include <algorithm>

namespace syncscore {

IntervalSet Normalize(IntervalSet set) {
  std::erase_if(set, [](const Interval &iv) { return !(iv.end > iv.begin); });
  std::sort(set.begin(), set.end(), [](const Interval &a, const Interval &b) {
    return a.begin < b.begin || (a.begin == b.begin && a.end < b.end);
  });
  IntervalSet out;
  for (const Interval &iv : set) {
    if (!out.empty() && iv.begin <= out.back().end) {
      out.back().end = std::max(out.back().end, iv.end);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

IntervalSet Union(const IntervalSet &a, const IntervalSet &b) {
  IntervalSet all = a;
  all.insert(all.end(), b.begin(), b.end());
  return Normalize(std::move(all));
}

IntervalSet Intersect(const IntervalSet &a, const IntervalSet &b) {
  IntervalSet out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].begin, b[j].begin);
    const double hi = std::min(a[i].end, b[j].end);
    if (hi > lo) out.push_back({lo, hi});
    if (a[i].end < b[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet Subtract(const IntervalSet &a, const IntervalSet &b) {
  IntervalSet out;
  std::size_t j = 0;
  for (const Interval &iv : a) {
    double cursor = iv.begin;
    while (j < b.size() && b[j].end <= cursor) ++j;
    std::size_t k = j;
    while (k < b.size() && b[k].begin < iv.end) {
      if (b[k].begin > cursor) out.push_back({cursor, b[k].begin});
      cursor = std::max(cursor, b[k].end);
      if (cursor >= iv.end) break;
      ++k;
    }
    if (cursor < iv.end) out.push_back({cursor, iv.end});
  }
  return out;
}

double TotalLength(const IntervalSet &set) {
  double total = 0.0;
  for (const Interval &iv : set) total += iv.Length();
  return total;
}

}  // namespace syncscore
