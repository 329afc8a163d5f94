// tools/commands.h

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

#ifndef SYNCSCORE_TOOLS_COMMANDS_H_
#define SYNCSCORE_TOOLS_COMMANDS_H_

#include <string>

#include "tool-common.h"

namespace syncscore {
namespace tools {

struct SyncCommandOptions {
  std::string session_dir;
  std::string reference;
  std::string manifest;
  std::string out_dir;
  double interval = 60.0;
  double window = 10.0;
  double max_lag = 2.0;
  bool piecewise = false;
  bool phat = false;
  int jobs = 1;
  OutputOptions output;
};
void RunSyncCommand(const SyncCommandOptions &opts);

struct ScoreWerOptions {
  std::string ref_path;
  std::string hyp_path;
  std::string filter_table;
  bool per_utterance = false;  // cpwer only
  OutputOptions output;
};
void RunScoreWer(const ScoreWerOptions &opts);
void RunScoreCpWer(const ScoreWerOptions &opts);

struct ScoreDiarOptions {
  std::string ref_path;
  std::string hyp_path;
  double collar = 0.0;
  bool no_overlap_scoring = false;
  int jobs = 1;
  OutputOptions output;
};
void RunScoreDer(const ScoreDiarOptions &opts);
void RunScoreJer(const ScoreDiarOptions &opts);

struct ScoreSadOptions {
  std::string ref_path;
  std::string hyp_path;
  double total_time = 0.0;  // 0 = span of the segments
  std::string normalize = "total";  // "total" or "speech"
  OutputOptions output;
};
void RunScoreSad(const ScoreSadOptions &opts);

struct RefineCommandOptions {
  std::string ctm_path;
  double gap = 0.3;
  std::string out_path;
};
void RunRefineCommand(const RefineCommandOptions &opts);

struct PipelineCommandOptions {
  std::string wav_path;
  std::string out_path;
  std::string recording_id;  // default: wav stem
  int num_speakers = 4;
  double frame_len = 0.025;
  double frame_shift = 0.010;
  double min_speech = 0.3;
  double min_silence = 0.1;
  double embed_window = 1.5;
  double embed_hop = 0.75;
};
void RunPipelineCommand(const PipelineCommandOptions &opts);

struct SimulateCommandOptions {
  std::string spec_path;
  std::string out_dir;
};
void RunSimulateCommand(const SimulateCommandOptions &opts);

}  // namespace tools
}  // namespace syncscore

#endif  // SYNCSCORE_TOOLS_COMMANDS_H_
