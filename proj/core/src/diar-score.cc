// core/src/diar-score.cc

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

#include "syncscore/diar-score.h"

#include <algorithm>
#include <future>
#include <limits>
#include <set>

#include "syncscore/assignment.h"
#include "syncscore/error.h"

namespace syncscore {

namespace {

std::map<std::string, IntervalSet> GroupBySpeaker(
    std::span<const RttmSegment> segments) {
  std::map<std::string, IntervalSet> by_speaker;
  for (const RttmSegment &seg : segments)
    by_speaker[seg.speaker].push_back({seg.onset, seg.Offset()});
  for (auto &[speaker, set] : by_speaker) set = Normalize(std::move(set));
  return by_speaker;
}

/// Regions where at least two of the given interval sets are active.
IntervalSet OverlapRegions(const std::vector<IntervalSet> &sets) {
  std::vector<std::pair<double, int>> events;
  for (const IntervalSet &set : sets) {
    for (const Interval &iv : set) {
      events.emplace_back(iv.begin, +1);
      events.emplace_back(iv.end, -1);
    }
  }
  std::sort(events.begin(), events.end());
  IntervalSet out;
  int depth = 0;
  double start = 0.0;
  for (const auto &[time, delta] : events) {
    const int next = depth + delta;
    if (depth < 2 && next >= 2) start = time;
    if (depth >= 2 && next < 2) out.push_back({start, time});
    depth = next;
  }
  return Normalize(std::move(out));
}

}  // namespace

IntervalSet SpeechRegions(std::span<const RttmSegment> segments) {
  IntervalSet all;
  for (const RttmSegment &seg : segments)
    all.push_back({seg.onset, seg.Offset()});
  return Normalize(std::move(all));
}

DiarScore ScoreDiarization(std::span<const RttmSegment> ref,
                           std::span<const RttmSegment> hyp,
                           const DiarOptions &opts) {
  const auto ref_full = GroupBySpeaker(ref);
  const auto hyp_full = GroupBySpeaker(hyp);
  std::vector<std::string> ref_names, hyp_names;
  for (const auto &[name, set] : ref_full) ref_names.push_back(name);
  for (const auto &[name, set] : hyp_full) hyp_names.push_back(name);
  const std::size_t num_ref = ref_names.size();
  const std::size_t num_hyp = hyp_names.size();

  double span_end = 0.0;
  for (const RttmSegment &seg : ref) span_end = std::max(span_end, seg.Offset());
  for (const RttmSegment &seg : hyp) span_end = std::max(span_end, seg.Offset());

  IntervalSet scored = span_end > 0.0 ? IntervalSet{{0.0, span_end}}
                                      : IntervalSet{};
  if (opts.collar > 0.0) {
    IntervalSet collars;
    for (const RttmSegment &seg : ref) {
      collars.push_back({seg.onset - opts.collar, seg.onset + opts.collar});
      collars.push_back(
          {seg.Offset() - opts.collar, seg.Offset() + opts.collar});
    }
    scored = Subtract(scored, Normalize(std::move(collars)));
  }
  if (!opts.score_overlap) {
    std::vector<IntervalSet> ref_sets;
    for (const auto &[name, set] : ref_full) ref_sets.push_back(set);
    scored = Subtract(scored, OverlapRegions(ref_sets));
  }

  std::vector<IntervalSet> ref_scored(num_ref), hyp_scored(num_hyp);
  for (std::size_t i = 0; i < num_ref; ++i)
    ref_scored[i] = Intersect(ref_full.at(ref_names[i]), scored);
  for (std::size_t j = 0; j < num_hyp; ++j)
    hyp_scored[j] = Intersect(hyp_full.at(hyp_names[j]), scored);

  // Globally optimal speaker mapping: maximize attributed overlap time.
  const std::size_t k = std::max(num_ref, num_hyp);
  std::vector<int> assignment;
  if (k > 0) {
    CostMatrix cost(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < num_ref; ++i) {
      for (std::size_t j = 0; j < num_hyp; ++j)
        cost[i][j] = -TotalLength(Intersect(ref_scored[i], hyp_scored[j]));
    }
    assignment = SolveAssignment(cost);
  }
  std::vector<int> ref_to_hyp(num_ref, -1);
  for (std::size_t i = 0; i < num_ref; ++i) {
    const int j = assignment.empty() ? -1 : assignment[i];
    if (j >= 0 && static_cast<std::size_t>(j) < num_hyp) ref_to_hyp[i] = j;
  }

  DiarScore score;
  score.scored_time = TotalLength(scored);
  for (std::size_t i = 0; i < num_ref; ++i) {
    if (ref_to_hyp[i] >= 0)
      score.mapping[ref_names[i]] = hyp_names[static_cast<std::size_t>(ref_to_hyp[i])];
  }

  // Partition the scored timeline into regions homogeneous in active
  // speakers and accumulate the md-eval error components.
  std::set<double> boundary_set;
  for (const auto &sets : {ref_scored, hyp_scored}) {
    for (const IntervalSet &set : sets) {
      for (const Interval &iv : set) {
        boundary_set.insert(iv.begin);
        boundary_set.insert(iv.end);
      }
    }
  }
  const std::vector<double> boundaries(boundary_set.begin(),
                                       boundary_set.end());
  std::vector<std::size_t> ref_pos(num_ref, 0), hyp_pos(num_hyp, 0);
  for (std::size_t b = 0; b + 1 < boundaries.size(); ++b) {
    const double a = boundaries[b], z = boundaries[b + 1];
    const double mid = (a + z) / 2.0;
    const double d = z - a;
    std::vector<std::size_t> active_ref;
    std::vector<char> hyp_active(num_hyp, 0);
    int num_hyp_active = 0;
    for (std::size_t i = 0; i < num_ref; ++i) {
      auto &pos = ref_pos[i];
      const IntervalSet &set = ref_scored[i];
      while (pos < set.size() && set[pos].end <= mid) ++pos;
      if (pos < set.size() && set[pos].begin <= mid && mid < set[pos].end)
        active_ref.push_back(i);
    }
    for (std::size_t j = 0; j < num_hyp; ++j) {
      auto &pos = hyp_pos[j];
      const IntervalSet &set = hyp_scored[j];
      while (pos < set.size() && set[pos].end <= mid) ++pos;
      if (pos < set.size() && set[pos].begin <= mid && mid < set[pos].end) {
        hyp_active[j] = 1;
        ++num_hyp_active;
      }
    }
    const int num_ref_active = static_cast<int>(active_ref.size());
    int num_correct = 0;
    for (const std::size_t i : active_ref) {
      if (ref_to_hyp[i] >= 0 && hyp_active[static_cast<std::size_t>(ref_to_hyp[i])])
        ++num_correct;
    }
    score.total_ref_speech += d * num_ref_active;
    score.missed += d * std::max(0, num_ref_active - num_hyp_active);
    score.false_alarm += d * std::max(0, num_hyp_active - num_ref_active);
    score.confusion +=
        d * (std::min(num_ref_active, num_hyp_active) - num_correct);
  }

  const double errors = score.missed + score.false_alarm + score.confusion;
  score.der = score.total_ref_speech > 0.0
                  ? errors / score.total_ref_speech
                  : (errors > 0.0 ? std::numeric_limits<double>::infinity()
                                  : 0.0);

  // JER is collar-free but reuses the mapping above.
  double jer_sum = 0.0;
  for (std::size_t i = 0; i < num_ref; ++i) {
    double jer_i = 1.0;
    if (ref_to_hyp[i] >= 0) {
      const IntervalSet &r = ref_full.at(ref_names[i]);
      const IntervalSet &h =
          hyp_full.at(hyp_names[static_cast<std::size_t>(ref_to_hyp[i])]);
      const double inter = TotalLength(Intersect(r, h));
      const double uni = TotalLength(Union(r, h));
      if (uni > 0.0) jer_i = 1.0 - inter / uni;
    }
    score.jer_per_speaker[ref_names[i]] = jer_i;
    jer_sum += jer_i;
  }
  score.jer = num_ref > 0 ? jer_sum / static_cast<double>(num_ref) : 0.0;
  return score;
}

double Jer(std::span<const RttmSegment> ref, std::span<const RttmSegment> hyp) {
  return ScoreDiarization(ref, hyp, DiarOptions{}).jer;
}

DiarReport ScoreDiarizationByRecording(std::span<const RttmSegment> ref,
                                       std::span<const RttmSegment> hyp,
                                       const DiarOptions &opts, int jobs) {
  std::map<std::string, std::vector<RttmSegment>> ref_by_rec, hyp_by_rec;
  for (const RttmSegment &seg : ref) ref_by_rec[seg.recording_id].push_back(seg);
  for (const RttmSegment &seg : hyp) hyp_by_rec[seg.recording_id].push_back(seg);
  std::set<std::string> recordings;
  for (const auto &[rec, segs] : ref_by_rec) recordings.insert(rec);
  for (const auto &[rec, segs] : hyp_by_rec) recordings.insert(rec);

  static const std::vector<RttmSegment> kNone;
  const std::vector<std::string> rec_list(recordings.begin(),
                                          recordings.end());
  std::vector<DiarScore> scores(rec_list.size());
  const auto score_one = [&](std::size_t i) {
    const std::string &rec = rec_list[i];
    const auto &r = ref_by_rec.count(rec) ? ref_by_rec.at(rec) : kNone;
    const auto &h = hyp_by_rec.count(rec) ? hyp_by_rec.at(rec) : kNone;
    return ScoreDiarization(r, h, opts);
  };
  if (jobs > 1 && rec_list.size() > 1) {
    std::vector<std::future<DiarScore>> futures;
    for (std::size_t i = 0; i < rec_list.size(); ++i)
      futures.push_back(std::async(std::launch::async, score_one, i));
    for (std::size_t i = 0; i < rec_list.size(); ++i)
      scores[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < rec_list.size(); ++i) scores[i] = score_one(i);
  }

  DiarReport report;
  double jer_sum = 0.0;
  std::size_t jer_count = 0;
  for (std::size_t i = 0; i < rec_list.size(); ++i) {
    const std::string &rec = rec_list[i];
    DiarScore &score = scores[i];
    report.overall.missed += score.missed;
    report.overall.false_alarm += score.false_alarm;
    report.overall.confusion += score.confusion;
    report.overall.total_ref_speech += score.total_ref_speech;
    report.overall.scored_time += score.scored_time;
    for (const auto &[speaker, jer] : score.jer_per_speaker) {
      jer_sum += jer;
      ++jer_count;
    }
    report.per_recording.emplace(rec, std::move(score));
  }
  const double errors = report.overall.missed + report.overall.false_alarm +
                        report.overall.confusion;
  report.overall.der =
      report.overall.total_ref_speech > 0.0
          ? errors / report.overall.total_ref_speech
          : (errors > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  report.overall.jer = jer_count > 0 ? jer_sum / jer_count : 0.0;
  return report;
}

SadScore ScoreSad(const IntervalSet &ref_speech, const IntervalSet &hyp_speech,
                  double total_time, SadNormalization norm) {
  if (!(total_time > 0.0))
    throw ArgumentError("ScoreSad: total_time must be positive");
  for (const IntervalSet *set : {&ref_speech, &hyp_speech}) {
    for (const Interval &iv : *set) {
      if (iv.end > total_time + 1e-9)
        throw ArgumentError("ScoreSad: intervals extend past total_time");
    }
  }
  const double missed = TotalLength(Subtract(ref_speech, hyp_speech));
  const double false_alarm = TotalLength(Subtract(hyp_speech, ref_speech));
  double denom = total_time;
  if (norm == SadNormalization::kRefSpeech) {
    denom = TotalLength(ref_speech);
    if (!(denom > 0.0))
      throw ArgumentError("ScoreSad: reference speech is empty");
  }
  SadScore score;
  score.missed_pct = 100.0 * missed / denom;
  score.false_alarm_pct = 100.0 * false_alarm / denom;
  score.total_error_pct = score.missed_pct + score.false_alarm_pct;
  return score;
}

}  // namespace syncscore
