// core/src/pipeline.cc

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

#include "syncscore/pipeline.h"

#include "syncscore/error.h"

namespace syncscore {

PipelineResult RunPipeline(const AudioSignal &signal,
                           const PipelineOptions &opts) {
  signal.Check();
  PipelineResult result;
  const FramePosteriors posteriors = EnergySadFrontend(signal, opts.frame);
  result.speech = SadDecode(posteriors, opts.sad);
  if (result.speech.empty()) {
    result.warnings.push_back("no speech detected");
    return result;
  }
  const std::vector<SegmentEmbedding> embeddings =
      EmbedSegments(signal, result.speech, opts.embed, &result.warnings);
  if (embeddings.size() < static_cast<std::size_t>(opts.num_speakers)) {
    throw ArgumentError(
        "pipeline: fewer subsegments (" + std::to_string(embeddings.size()) +
        ") than speakers (" + std::to_string(opts.num_speakers) +
        "); not enough speech to cluster");
  }
  result.segments = AhcDiarize(embeddings, opts.num_speakers,
                               opts.recording_id);
  return result;
}

}  // namespace syncscore
