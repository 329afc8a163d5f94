// tools/cmd-simulate.cc

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

#include <nlohmann/json.hpp>

#include "commands.h"
#include "syncscore/edits.h"
#include "syncscore/rttm.h"
#include "syncscore/simulate.h"
#include "syncscore/transcript.h"
#include "syncscore/wav-io.h"

namespace syncscore {
namespace tools {

namespace fs = std::filesystem;
using nlohmann::json;

void RunSimulateCommand(const SimulateCommandOptions &opts) {
  const SessionSpec spec = ParseSessionSpec(ReadFile(opts.spec_path));
  const GeneratedSession session = GenerateSession(spec);

  fs::create_directories(opts.out_dir);
  const fs::path out(opts.out_dir);
  WriteWav(session.reference, (out / "reference.wav").string());
  for (const auto &[device_id, signal] : session.devices)
    WriteWav(signal, (out / (device_id + ".wav")).string());
  WriteFile((out / "edits.json").string(),
            EmitEditsManifest(session.manifest));
  WriteFile((out / "transcript.json").string(),
            EmitTranscriptJson(session.transcript));
  WriteFile((out / "reference.rttm").string(), EmitRttm(session.rttm));

  json drift = json::object();
  for (const auto &[device_id, fit] : session.true_drift) {
    json segments = json::array();
    for (const DriftSegment &seg : fit.segments) {
      segments.push_back({{"t_start", seg.t_start},
                          {"t_end", seg.t_end},
                          {"slope", seg.slope},
                          {"intercept", seg.intercept}});
    }
    drift[device_id] = {{"segments", std::move(segments)}};
  }
  WriteFile((out / "drift_truth.json").string(), drift.dump(2) + "\n");

  std::cout << "wrote session " << spec.session_id << ": "
            << session.devices.size() << " devices, "
            << session.transcript.size() << " utterances to " << opts.out_dir
            << "\n";
}

}  // namespace tools
}  // namespace syncscore
