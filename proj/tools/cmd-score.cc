// tools/cmd-score.cc

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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "commands.h"
#include "syncscore/cpwer.h"
#include "syncscore/diar-score.h"
#include "syncscore/error.h"
#include "syncscore/rttm.h"
#include "syncscore/textnorm.h"
#include "syncscore/transcript.h"
#include "syncscore/wer.h"

namespace syncscore {
namespace tools {

using nlohmann::json;

namespace {

ReplacementTable LoadTable(const std::string &path) {
  if (path.empty()) return ReplacementTable::Default();
  return ReplacementTable::FromText(ReadFile(path));
}

json CountsToJson(const EditCounts &counts) {
  return {{"hits", counts.hits},
          {"substitutions", counts.substitutions},
          {"insertions", counts.insertions},
          {"deletions", counts.deletions},
          {"ref_len", counts.ref_len},
          {"errors", counts.NumErrors()}};
}

std::string WerLine(const char *label, const EditCounts &counts,
                    bool undefined) {
  char buf[192];
  if (undefined) {
    std::snprintf(buf, sizeof(buf),
                  "%%%s undefined [ %lld errors / empty reference ]\n", label,
                  static_cast<long long>(counts.NumErrors()));
  } else {
    std::snprintf(
        buf, sizeof(buf),
        "%%%s %.2f [ %lld / %lld, %lld ins, %lld del, %lld sub ]\n", label,
        100.0 * counts.Wer(), static_cast<long long>(counts.NumErrors()),
        static_cast<long long>(counts.ref_len),
        static_cast<long long>(counts.insertions),
        static_cast<long long>(counts.deletions),
        static_cast<long long>(counts.substitutions));
  }
  return buf;
}

}  // namespace

void RunScoreWer(const ScoreWerOptions &opts) {
  const ReplacementTable table = LoadTable(opts.filter_table);
  auto ref_utts = ParseTranscriptJson(ReadFile(opts.ref_path));
  auto hyp_utts = ParseTranscriptJson(ReadFile(opts.hyp_path));
  // Speaker-agnostic WER: one chronological stream per side.
  const auto to_stream = [&](std::vector<TranscriptUtterance> utts) {
    std::stable_sort(utts.begin(), utts.end(),
                     [](const TranscriptUtterance &a,
                        const TranscriptUtterance &b) {
                       return a.start_time < b.start_time;
                     });
    std::vector<std::string> tokens;
    for (const TranscriptUtterance &u : utts) {
      const TokenSeq seq = Normalize(u.words, false, table);
      tokens.insert(tokens.end(), seq.tokens.begin(), seq.tokens.end());
    }
    return tokens;
  };
  const std::vector<std::string> ref_tokens = to_stream(std::move(ref_utts));
  const std::vector<std::string> hyp_tokens = to_stream(std::move(hyp_utts));
  const EditCounts counts = AlignWer(ref_tokens, hyp_tokens);
  const bool undefined = counts.ref_len == 0 && counts.NumErrors() > 0;

  json report = CountsToJson(counts);
  report["wer"] = undefined ? json() : json(counts.Wer());
  EmitReport(opts.output, report.dump(2) + "\n",
             WerLine("WER", counts, undefined));
}

void RunScoreCpWer(const ScoreWerOptions &opts) {
  const ReplacementTable table = LoadTable(opts.filter_table);
  const auto ref_utts = ParseTranscriptJson(ReadFile(opts.ref_path));
  const auto hyp_utts = ParseTranscriptJson(ReadFile(opts.hyp_path));
  const SpeakerStreams ref = BuildSpeakerStreams(ref_utts, table);
  const SpeakerStreams hyp = BuildSpeakerStreams(hyp_utts, table);

  PerUtteranceReport per_utt;
  const CpWerResult result =
      ComputeCpWer(ref, hyp, opts.per_utterance ? &per_utt : nullptr);

  json report;
  report["cpwer"] = result.undefined_rate ? json() : json(result.cpwer);
  report["undefined"] = result.undefined_rate;
  report["counts"] = CountsToJson(result.counts);
  report["mapping"] = json::object();
  for (const auto &[hyp_speaker, ref_speaker] : result.mapping)
    report["mapping"][hyp_speaker] = ref_speaker;
  report["per_speaker"] = json::array();
  for (const SpeakerPairCounts &pair : result.per_speaker) {
    json entry = CountsToJson(pair.counts);
    entry["ref_speaker"] = pair.ref_speaker;
    entry["hyp_speaker"] = pair.hyp_speaker;
    report["per_speaker"].push_back(std::move(entry));
  }
  if (opts.per_utterance) {
    report["per_utterance"] = json::array();
    for (const UtteranceErrors &u : per_utt.utterances) {
      json entry = CountsToJson(u.counts);
      entry["ref_speaker"] = u.ref_speaker;
      entry["utterance_index"] = u.utterance_index;
      entry["start_time"] = u.start_time;
      report["per_utterance"].push_back(std::move(entry));
    }
  }

  std::string table_text =
      WerLine("cpWER", result.counts, result.undefined_rate);
  for (const auto &[hyp_speaker, ref_speaker] : result.mapping)
    table_text += "hyp " + hyp_speaker + " -> ref " + ref_speaker + "\n";
  char buf[192];
  for (const SpeakerPairCounts &pair : result.per_speaker) {
    std::snprintf(buf, sizeof(buf),
                  "speaker %-8s vs %-8s: %lld / %lld errors\n",
                  pair.ref_speaker.empty() ? "-" : pair.ref_speaker.c_str(),
                  pair.hyp_speaker.empty() ? "-" : pair.hyp_speaker.c_str(),
                  static_cast<long long>(pair.counts.NumErrors()),
                  static_cast<long long>(pair.counts.ref_len));
    table_text += buf;
  }
  if (opts.per_utterance) {
    for (const UtteranceErrors &u : per_utt.utterances) {
      std::snprintf(buf, sizeof(buf),
                    "utt %-8s #%-4d t=%8.2f: %lld err (%lld sub %lld ins "
                    "%lld del) / %lld\n",
                    u.ref_speaker.c_str(), u.utterance_index, u.start_time,
                    static_cast<long long>(u.counts.NumErrors()),
                    static_cast<long long>(u.counts.substitutions),
                    static_cast<long long>(u.counts.insertions),
                    static_cast<long long>(u.counts.deletions),
                    static_cast<long long>(u.counts.ref_len));
      table_text += buf;
    }
  }
  EmitReport(opts.output, report.dump(2) + "\n", table_text);
}

namespace {

json DiarScoreToJson(const DiarScore &score) {
  return {{"der", score.der},
          {"jer", score.jer},
          {"missed", score.missed},
          {"false_alarm", score.false_alarm},
          {"confusion", score.confusion},
          {"total_ref_speech", score.total_ref_speech},
          {"scored_time", score.scored_time}};
}

std::string DiarRow(const std::string &name, const DiarScore &s) {
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "%-16s %9.2f %9.2f %9.2f %9.2f%% %9.2f%%\n", name.c_str(),
                s.missed, s.false_alarm, s.confusion, 100.0 * s.der,
                100.0 * s.jer);
  return buf;
}

DiarReport ScoreDiarFiles(const ScoreDiarOptions &opts) {
  const auto ref = ParseRttm(ReadFile(opts.ref_path));
  const auto hyp = ParseRttm(ReadFile(opts.hyp_path));
  DiarOptions diar;
  diar.collar = opts.collar;
  diar.score_overlap = !opts.no_overlap_scoring;
  return ScoreDiarizationByRecording(ref, hyp, diar, opts.jobs);
}

}  // namespace

void RunScoreDer(const ScoreDiarOptions &opts) {
  const DiarReport report = ScoreDiarFiles(opts);
  json out;
  out["collar"] = opts.collar;
  out["score_overlap"] = !opts.no_overlap_scoring;
  out["recordings"] = json::object();
  for (const auto &[rec, score] : report.per_recording)
    out["recordings"][rec] = DiarScoreToJson(score);
  out["overall"] = DiarScoreToJson(report.overall);

  std::string table;
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%-16s %9s %9s %9s %10s %10s\n",
                "Recording", "Missed", "FA", "Conf.", "DER", "JER");
  table += buf;
  for (const auto &[rec, score] : report.per_recording)
    table += DiarRow(rec, score);
  table += DiarRow("OVERALL", report.overall);
  EmitReport(opts.output, out.dump(2) + "\n", table);
}

void RunScoreJer(const ScoreDiarOptions &opts) {
  const DiarReport report = ScoreDiarFiles(opts);
  json out;
  out["recordings"] = json::object();
  for (const auto &[rec, score] : report.per_recording) {
    out["recordings"][rec] = {{"jer", score.jer}};
    json speakers = json::object();
    for (const auto &[speaker, jer] : score.jer_per_speaker)
      speakers[speaker] = jer;
    out["recordings"][rec]["per_speaker"] = std::move(speakers);
  }
  out["overall"] = {{"jer", report.overall.jer}};

  std::string table;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%-16s %10s\n", "Recording", "JER");
  table += buf;
  for (const auto &[rec, score] : report.per_recording) {
    std::snprintf(buf, sizeof(buf), "%-16s %9.2f%%\n", rec.c_str(),
                  100.0 * score.jer);
    table += buf;
  }
  std::snprintf(buf, sizeof(buf), "%-16s %9.2f%%\n", "OVERALL",
                100.0 * report.overall.jer);
  table += buf;
  EmitReport(opts.output, out.dump(2) + "\n", table);
}

void RunScoreSad(const ScoreSadOptions &opts) {
  const auto ref = ParseRttm(ReadFile(opts.ref_path));
  const auto hyp = ParseRttm(ReadFile(opts.hyp_path));
  const SadNormalization norm = opts.normalize == "speech"
                                    ? SadNormalization::kRefSpeech
                                    : SadNormalization::kTotalTime;

  std::map<std::string, std::vector<RttmSegment>> ref_by_rec, hyp_by_rec;
  for (const RttmSegment &seg : ref) ref_by_rec[seg.recording_id].push_back(seg);
  for (const RttmSegment &seg : hyp) hyp_by_rec[seg.recording_id].push_back(seg);
  std::map<std::string, SadScore> per_recording;
  double missed_s = 0.0, fa_s = 0.0, denom_s = 0.0;
  std::set<std::string> recordings;
  for (const auto &[rec, segs] : ref_by_rec) recordings.insert(rec);
  for (const auto &[rec, segs] : hyp_by_rec) recordings.insert(rec);
  for (const std::string &rec : recordings) {
    static const std::vector<RttmSegment> kNone;
    const auto &r = ref_by_rec.count(rec) ? ref_by_rec[rec] : kNone;
    const auto &h = hyp_by_rec.count(rec) ? hyp_by_rec[rec] : kNone;
    const IntervalSet ref_speech = SpeechRegions(r);
    const IntervalSet hyp_speech = SpeechRegions(h);
    double total = opts.total_time;
    if (total <= 0.0) {
      for (const Interval &iv : ref_speech) total = std::max(total, iv.end);
      for (const Interval &iv : hyp_speech) total = std::max(total, iv.end);
    }
    const SadScore score = ScoreSad(ref_speech, hyp_speech, total, norm);
    // Pool seconds across recordings for the overall numbers.
    const double denom = norm == SadNormalization::kRefSpeech
                             ? TotalLength(ref_speech)
                             : total;
    missed_s += score.missed_pct / 100.0 * denom;
    fa_s += score.false_alarm_pct / 100.0 * denom;
    denom_s += denom;
    per_recording.emplace(rec, score);
  }
  SadScore overall;
  if (denom_s > 0.0) {
    overall.missed_pct = 100.0 * missed_s / denom_s;
    overall.false_alarm_pct = 100.0 * fa_s / denom_s;
    overall.total_error_pct = overall.missed_pct + overall.false_alarm_pct;
  }

  const auto to_json = [](const SadScore &s) {
    return json{{"missed_speech_pct", s.missed_pct},
                {"false_alarm_pct", s.false_alarm_pct},
                {"total_error_pct", s.total_error_pct}};
  };
  json out;
  out["normalize"] = opts.normalize;
  out["recordings"] = json::object();
  for (const auto &[rec, score] : per_recording)
    out["recordings"][rec] = to_json(score);
  out["overall"] = to_json(overall);

  std::string table;
  char buf[192];
  std::snprintf(buf, sizeof(buf), "%-16s %14s %14s %14s\n", "Recording",
                "Missed speech", "False alarm", "Total error");
  table += buf;
  const auto row = [&](const std::string &name, const SadScore &s) {
    std::snprintf(buf, sizeof(buf), "%-16s %13.1f%% %13.1f%% %13.1f%%\n",
                  name.c_str(), s.missed_pct, s.false_alarm_pct,
                  s.total_error_pct);
    return std::string(buf);
  };
  for (const auto &[rec, score] : per_recording) table += row(rec, score);
  table += row("OVERALL", overall);
  EmitReport(opts.output, out.dump(2) + "\n", table);
}

}  // namespace tools
}  // namespace syncscore
