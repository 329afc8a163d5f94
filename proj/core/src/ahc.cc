// core/src/ahc.cc

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

#include "syncscore/ahc.h"

#include <algorithm>
#include <limits>
#include <map>

#include "syncscore/error.h"

namespace syncscore {

std::vector<int> AhcCluster(const std::vector<std::vector<float>> &vectors,
                            int num_clusters) {
  const std::size_t n = vectors.size();
  if (num_clusters < 1) throw ArgumentError("AhcCluster: num_clusters < 1");
  if (n < static_cast<std::size_t>(num_clusters))
    throw ArgumentError("AhcCluster: fewer embeddings (" + std::to_string(n) +
                        ") than clusters (" + std::to_string(num_clusters) +
                        ")");

  // Active cluster list with average-linkage distances, O(n^3) overall;
  // subsegment counts are small enough that this is not a concern.
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i][j] = dist[j][i] = CosineDistance(vectors[i], vectors[j]);
    }
  }
  std::vector<int> size(n, 1);
  std::vector<char> alive(n, 1);
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);

  int remaining = static_cast<int>(n);
  while (remaining > num_clusters) {
    double best = std::numeric_limits<double>::max();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        if (dist[i][j] < best) {  // ties keep the smallest (i, j)
          best = dist[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    // Merge bj into bi with average linkage.
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k] || k == bi || k == bj) continue;
      dist[bi][k] = dist[k][bi] =
          (dist[bi][k] * size[bi] + dist[bj][k] * size[bj]) /
          (size[bi] + size[bj]);
    }
    size[bi] += size[bj];
    alive[bj] = 0;
    parent[bj] = static_cast<int>(bi);
    --remaining;
  }

  const auto root = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  std::vector<int> labels(n);
  std::map<int, int> relabel;  // root -> label, by first occurrence
  for (std::size_t i = 0; i < n; ++i) {
    const int r = root(static_cast<int>(i));
    const auto it = relabel.find(r);
    if (it == relabel.end()) {
      const int label = static_cast<int>(relabel.size());
      relabel.emplace(r, label);
      labels[i] = label;
    } else {
      labels[i] = it->second;
    }
  }
  return labels;
}

std::vector<RttmSegment> AhcDiarize(
    const std::vector<SegmentEmbedding> &embeddings, int num_speakers,
    const std::string &recording_id) {
  std::vector<std::vector<float>> vectors;
  vectors.reserve(embeddings.size());
  for (const SegmentEmbedding &e : embeddings) vectors.push_back(e.vector);
  const std::vector<int> labels = AhcCluster(vectors, num_speakers);

  // Order subsegments by time, then stitch runs of equal labels.
  std::vector<std::size_t> order(embeddings.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return embeddings[a].segment.onset <
                            embeddings[b].segment.onset;
                   });

  struct Piece {
    double onset, offset;
    int label;
  };
  std::vector<Piece> pieces;
  for (const std::size_t i : order) {
    pieces.push_back(
        {embeddings[i].segment.onset, embeddings[i].segment.offset, labels[i]});
  }
  // Cut overlapping neighbors with different labels at the overlap midpoint.
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (pieces[i].label != pieces[i + 1].label &&
        pieces[i].offset > pieces[i + 1].onset) {
      const double mid = (pieces[i].offset + pieces[i + 1].onset) / 2.0;
      pieces[i].offset = mid;
      pieces[i + 1].onset = mid;
    }
  }

  std::map<int, std::string> names;  // label -> spkN by first appearance
  std::vector<RttmSegment> segments;
  for (const Piece &p : pieces) {
    if (!(p.offset > p.onset)) continue;
    if (!names.count(p.label))
      names[p.label] = "spk" + std::to_string(names.size() + 1);
    if (!segments.empty() && segments.back().speaker == names[p.label] &&
        p.onset <= segments.back().Offset() + 1e-6) {
      segments.back().duration =
          std::max(segments.back().duration,
                   p.offset - segments.back().onset);
      continue;
    }
    segments.push_back({recording_id, p.onset, p.offset - p.onset,
                        names[p.label]});
  }
  return segments;
}

}  // namespace syncscore
