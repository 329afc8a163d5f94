// core/include/syncscore/ahc.h

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

#ifndef SYNCSCORE_AHC_H_
#define SYNCSCORE_AHC_H_

#include <string>
#include <vector>

#include "syncscore/embed.h"
#include "syncscore/rttm.h"

namespace syncscore {

/// Average-linkage agglomerative clustering over cosine distances, merging
/// until exactly num_clusters remain. Returns one label in [0,
/// num_clusters) per input vector; labels are numbered by first occurrence.
/// Throws ArgumentError when there are fewer vectors than clusters.
std::vector<int> AhcCluster(const std::vector<std::vector<float>> &vectors,
                            int num_clusters);

/// Clusters subsegment embeddings into num_speakers speakers and merges
/// adjacent same-cluster subsegments into RTTM segments. Overlapping
/// neighbors with different labels are cut at the midpoint of the overlap.
/// Speaker labels are spk1..spkN in order of first appearance.
std::vector<RttmSegment> AhcDiarize(
    const std::vector<SegmentEmbedding> &embeddings, int num_speakers,
    const std::string &recording_id);

}  // namespace syncscore

#endif  // SYNCSCORE_AHC_H_
