// tools/cmd-sync.cc

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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>

#include <nlohmann/json.hpp>

#include "commands.h"
#include "syncscore/edits.h"
#include "syncscore/error.h"
#include "syncscore/sync.h"
#include "syncscore/wav-io.h"

namespace syncscore {
namespace tools {

namespace fs = std::filesystem;
using nlohmann::json;

void RunSyncCommand(const SyncCommandOptions &opts) {
  const EditsManifest manifest = ParseEditsManifest(ReadFile(opts.manifest));
  const AudioSignal reference = ReadWav(opts.reference);

  if (!fs::is_directory(opts.session_dir))
    throw ConfigError("session dir does not exist: " + opts.session_dir);
  std::map<std::string, AudioSignal> devices;
  const fs::path ref_path = fs::weakly_canonical(opts.reference);
  std::vector<fs::path> wavs;
  for (const auto &entry : fs::directory_iterator(opts.session_dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".wav")
      continue;
    if (fs::weakly_canonical(entry.path()) == ref_path) continue;
    wavs.push_back(entry.path());
  }
  if (wavs.empty())
    throw ConfigError("no device WAV files in " + opts.session_dir);
  for (const fs::path &path : wavs)
    devices.emplace(path.stem().string(), ReadWav(path.string()));

  SyncOptions sync_opts;
  sync_opts.delay.interval = opts.interval;
  sync_opts.delay.window_len = opts.window;
  sync_opts.delay.max_lag = opts.max_lag;
  sync_opts.delay.phat_weighting = opts.phat;
  sync_opts.fit.piecewise = opts.piecewise;
  sync_opts.jobs = opts.jobs;

  const SyncResult result =
      SynchronizeSession(devices, reference, manifest, sync_opts);

  fs::create_directories(opts.out_dir);
  for (const auto &[device_id, signal] : result.devices)
    WriteWav(signal, (fs::path(opts.out_dir) / (device_id + ".wav")).string());

  json report_devices = json::object();
  for (const auto &[device_id, fit] : result.fits) {
    json segments = json::array();
    for (const DriftSegment &seg : fit.segments) {
      segments.push_back({{"t_start", seg.t_start},
                          {"t_end", seg.t_end},
                          {"slope", seg.slope},
                          {"intercept", seg.intercept}});
    }
    report_devices[device_id] = {
        {"segments", std::move(segments)},
        {"residual_rms", fit.residual_rms},
        {"num_points",
         static_cast<std::int64_t>(result.tracks.at(device_id).points.size())}};
  }
  const json report = {{"session", manifest.session_id},
                       {"devices", std::move(report_devices)}};
  WriteFile((fs::path(opts.out_dir) / "drift_report.json").string(),
            report.dump(2) + "\n");

  std::string table;
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%-12s %10s %14s %14s %10s\n", "Device",
                "Points", "Slope", "ResidualRMS", "Segments");
  table += buf;
  for (const auto &[device_id, fit] : result.fits) {
    std::snprintf(buf, sizeof(buf), "%-12s %10zu %14.3e %14.3e %10zu\n",
                  device_id.c_str(), result.tracks.at(device_id).points.size(),
                  fit.segments.front().slope, fit.residual_rms,
                  fit.segments.size());
    table += buf;
  }
  EmitReport(opts.output, report.dump(2) + "\n", table);
}

}  // namespace tools
}  // namespace syncscore
