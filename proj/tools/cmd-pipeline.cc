// tools/cmd-pipeline.cc

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

#include <filesystem>
#include <iostream>

#include "commands.h"
#include "syncscore/pipeline.h"
#include "syncscore/rttm.h"
#include "syncscore/wav-io.h"

namespace syncscore {
namespace tools {

void RunPipelineCommand(const PipelineCommandOptions &opts) {
  const AudioSignal signal = ReadWav(opts.wav_path);

  PipelineOptions pipeline;
  pipeline.recording_id =
      opts.recording_id.empty()
          ? std::filesystem::path(opts.wav_path).stem().string()
          : opts.recording_id;
  pipeline.num_speakers = opts.num_speakers;
  pipeline.frame.frame_len = opts.frame_len;
  pipeline.frame.frame_shift = opts.frame_shift;
  pipeline.sad.min_speech = opts.min_speech;
  pipeline.sad.min_silence = opts.min_silence;
  pipeline.embed.window = opts.embed_window;
  pipeline.embed.hop = opts.embed_hop;
  pipeline.embed.frame = pipeline.frame;

  const PipelineResult result = RunPipeline(signal, pipeline);
  for (const std::string &warning : result.warnings)
    std::cerr << "warning: " << warning << "\n";
  WriteFile(opts.out_path, EmitRttm(result.segments));

  double speech_time = 0.0;
  for (const Interval &iv : result.speech) speech_time += iv.Length();
  std::cout << "speech " << speech_time << "s in " << result.speech.size()
            << " intervals; wrote " << result.segments.size()
            << " segments to " << opts.out_path << "\n";
}

}  // namespace tools
}  // namespace syncscore
