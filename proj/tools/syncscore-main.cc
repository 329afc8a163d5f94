// tools/syncscore-main.cc

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

#include <iostream>

#include <CLI11.hpp>

#include "commands.h"
#include "syncscore/error.h"

namespace {

using namespace syncscore::tools;

void AddOutputFlags(CLI::App *cmd, OutputOptions *output) {
  cmd->add_option("--format", output->format, "Report format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", output->out_path,
                  "Write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "syncscore: multi-device array synchronization and multispeaker "
      "evaluation toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file");

  // ---- sync ----
  SyncCommandOptions sync_opts;
  CLI::App *sync = app.add_subcommand(
      "sync", "Frame-drop and clock-drift correction for a session");
  sync->add_option("--session-dir", sync_opts.session_dir,
                   "Directory with the device WAV files")
      ->required();
  sync->add_option("--reference", sync_opts.reference,
                   "Reference (binaural) WAV file")
      ->required();
  sync->add_option("--manifest", sync_opts.manifest,
                   "Edits manifest JSON (drop insertions per device)")
      ->required();
  sync->add_option("--out-dir", sync_opts.out_dir,
                   "Output directory for corrected WAVs and the drift report")
      ->required();
  sync->add_option("--interval", sync_opts.interval,
                   "Seconds between correlation windows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sync->add_option("--window", sync_opts.window,
                   "Correlation window length, seconds")
      ->check(CLI::Range(1.0, 1e9))
      ->capture_default_str();
  sync->add_option("--max-lag", sync_opts.max_lag,
                   "Correlation search range, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sync->add_flag("--piecewise", sync_opts.piecewise,
                 "Allow a piecewise-linear drift fit");
  sync->add_flag("--phat", sync_opts.phat,
                 "Spectral whitening (PHAT) correlation weighting");
  sync->add_option("--jobs", sync_opts.jobs, "Devices processed concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddOutputFlags(sync, &sync_opts.output);
  sync->callback([&] { RunSyncCommand(sync_opts); });

  // ---- score ----
  CLI::App *score =
      app.add_subcommand("score", "Scoring: wer, cpwer, der, jer, sad");
  score->require_subcommand(1);

  ScoreWerOptions wer_opts;
  CLI::App *wer = score->add_subcommand("wer", "Speaker-agnostic WER");
  wer->add_option("--ref", wer_opts.ref_path, "Reference transcript JSON")
      ->required();
  wer->add_option("--hyp", wer_opts.hyp_path, "Hypothesis transcript JSON")
      ->required();
  wer->add_option("--filter-table", wer_opts.filter_table,
                  "Extra whole-word replacement rules (two-column text)");
  AddOutputFlags(wer, &wer_opts.output);
  wer->callback([&] { RunScoreWer(wer_opts); });

  ScoreWerOptions cpwer_opts;
  CLI::App *cpwer = score->add_subcommand(
      "cpwer", "Concatenated minimum-permutation WER");
  cpwer->add_option("--ref", cpwer_opts.ref_path, "Reference transcript JSON")
      ->required();
  cpwer->add_option("--hyp", cpwer_opts.hyp_path, "Hypothesis transcript JSON")
      ->required();
  cpwer->add_option("--filter-table", cpwer_opts.filter_table,
                    "Extra whole-word replacement rules (two-column text)");
  cpwer->add_flag("--per-utterance", cpwer_opts.per_utterance,
                  "Report per-utterance errors recovered from the reference");
  AddOutputFlags(cpwer, &cpwer_opts.output);
  cpwer->callback([&] { RunScoreCpWer(cpwer_opts); });

  ScoreDiarOptions der_opts;
  CLI::App *der = score->add_subcommand("der", "Diarization error rate");
  der->add_option("--ref", der_opts.ref_path, "Reference RTTM")->required();
  der->add_option("--hyp", der_opts.hyp_path, "Hypothesis RTTM")->required();
  der->add_option("--collar", der_opts.collar,
                  "No-score zone around reference boundaries, seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  der->add_flag("--no-overlap-scoring", der_opts.no_overlap_scoring,
                "Exclude regions where reference speakers overlap");
  der->add_option("--jobs", der_opts.jobs, "Recordings scored concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddOutputFlags(der, &der_opts.output);
  der->callback([&] { RunScoreDer(der_opts); });

  ScoreDiarOptions jer_opts;
  CLI::App *jer = score->add_subcommand("jer", "Jaccard error rate");
  jer->add_option("--ref", jer_opts.ref_path, "Reference RTTM")->required();
  jer->add_option("--hyp", jer_opts.hyp_path, "Hypothesis RTTM")->required();
  jer->add_option("--jobs", jer_opts.jobs, "Recordings scored concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddOutputFlags(jer, &jer_opts.output);
  jer->callback([&] { RunScoreJer(jer_opts); });

  ScoreSadOptions sad_opts;
  CLI::App *sad =
      score->add_subcommand("sad", "Speech activity detection error");
  sad->add_option("--ref", sad_opts.ref_path, "Reference RTTM")->required();
  sad->add_option("--hyp", sad_opts.hyp_path, "Hypothesis RTTM")->required();
  sad->add_option("--total-time", sad_opts.total_time,
                  "Total scored time per recording, seconds (default: span "
                  "of the segments)")
      ->check(CLI::NonNegativeNumber);
  sad->add_option("--normalize", sad_opts.normalize,
                  "Percentage denominator")
      ->check(CLI::IsMember({"total", "speech"}))
      ->capture_default_str();
  AddOutputFlags(sad, &sad_opts.output);
  sad->callback([&] { RunScoreSad(sad_opts); });

  // ---- refine ----
  RefineCommandOptions refine_opts;
  CLI::App *refine = app.add_subcommand(
      "refine", "Merge word alignments into utterance RTTM");
  refine->add_option("--ctm", refine_opts.ctm_path, "Word-level CTM input")
      ->required();
  refine->add_option("--gap", refine_opts.gap,
                     "Maximum silence inside an utterance, seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  refine->add_option("--out", refine_opts.out_path, "Output RTTM path")
      ->required();
  refine->callback([&] { RunRefineCommand(refine_opts); });

  // ---- pipeline ----
  PipelineCommandOptions pipe_opts;
  CLI::App *pipeline = app.add_subcommand(
      "pipeline", "Energy SAD + embedding + AHC diarization");
  pipeline->add_option("--wav", pipe_opts.wav_path, "Input WAV")->required();
  pipeline->add_option("--out", pipe_opts.out_path, "Output RTTM path")
      ->required();
  pipeline->add_option("--recording-id", pipe_opts.recording_id,
                       "Recording id for RTTM lines (default: WAV stem)");
  pipeline->add_option("--num-speakers", pipe_opts.num_speakers,
                       "Number of speakers for AHC")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pipeline->add_option("--frame-len", pipe_opts.frame_len,
                       "Feature frame length, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pipeline->add_option("--frame-shift", pipe_opts.frame_shift,
                       "Feature frame shift, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pipeline->add_option("--min-speech", pipe_opts.min_speech,
                       "Minimum speech duration, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pipeline->add_option("--min-silence", pipe_opts.min_silence,
                       "Minimum silence duration, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pipeline->add_option("--embed-window", pipe_opts.embed_window,
                       "Embedding subsegment window, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pipeline->add_option("--embed-hop", pipe_opts.embed_hop,
                       "Embedding subsegment hop, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pipeline->callback([&] { RunPipelineCommand(pipe_opts); });

  // ---- simulate ----
  SimulateCommandOptions sim_opts;
  CLI::App *simulate = app.add_subcommand(
      "simulate", "Generate a synthetic session with ground truth");
  simulate->add_option("--spec", sim_opts.spec_path, "Session spec JSON")
      ->required();
  simulate->add_option("--out-dir", sim_opts.out_dir, "Output directory")
      ->required();
  simulate->callback([&] { RunSimulateCommand(sim_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  } catch (const syncscore::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
