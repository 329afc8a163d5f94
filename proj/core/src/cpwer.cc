// core/src/cpwer.cc

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

#include "syncscore/cpwer.h"

#include <algorithm>
#include <limits>

#include "syncscore/assignment.h"
#include "syncscore/error.h"

namespace syncscore {

namespace {

struct Stream {
  std::string speaker;
  std::vector<std::string> tokens;          // chronological concatenation
  std::vector<std::int64_t> utterance_lens;  // token count per utterance
  std::vector<double> utterance_starts;
};

std::vector<Stream> Concatenate(const SpeakerStreams &streams) {
  std::vector<Stream> out;
  out.reserve(streams.size());
  for (const auto &[speaker, utts] : streams) {
    std::vector<const TimedTokens *> order;
    order.reserve(utts.size());
    for (const TimedTokens &u : utts) order.push_back(&u);
    std::stable_sort(order.begin(), order.end(),
                     [](const TimedTokens *a, const TimedTokens *b) {
                       return a->start_time < b->start_time;
                     });
    Stream s;
    s.speaker = speaker;
    for (const TimedTokens *u : order) {
      s.tokens.insert(s.tokens.end(), u->tokens.begin(), u->tokens.end());
      s.utterance_lens.push_back(static_cast<std::int64_t>(u->tokens.size()));
      s.utterance_starts.push_back(u->start_time);
    }
    out.push_back(std::move(s));
  }
  return out;
}

const std::vector<std::string> kEmptyTokens;

}  // namespace

SpeakerStreams BuildSpeakerStreams(
    const std::vector<TranscriptUtterance> &utterances,
    const ReplacementTable &table) {
  SpeakerStreams streams;
  for (const TranscriptUtterance &u : utterances) {
    TimedTokens t;
    t.start_time = u.start_time;
    t.tokens = Normalize(u.words, /*keep_noise_markers=*/false, table).tokens;
    streams[u.speaker].push_back(std::move(t));
  }
  return streams;
}

CpWerResult ComputeCpWer(const SpeakerStreams &ref, const SpeakerStreams &hyp,
                         PerUtteranceReport *per_utterance) {
  const std::vector<Stream> ref_streams = Concatenate(ref);
  const std::vector<Stream> hyp_streams = Concatenate(hyp);
  const std::size_t num_ref = ref_streams.size();
  const std::size_t num_hyp = hyp_streams.size();
  const std::size_t k = std::max(num_ref, num_hyp);

  CpWerResult result;
  if (k == 0) {
    result.undefined_rate = true;
    result.cpwer = std::numeric_limits<double>::quiet_NaN();
    return result;
  }

  // Pairwise counts; rows/columns beyond the real speakers are empty
  // pseudo-speakers.
  std::vector<std::vector<EditCounts>> pair_counts(
      k, std::vector<EditCounts>(k));
  CostMatrix cost(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto &ref_tokens =
        i < num_ref ? ref_streams[i].tokens : kEmptyTokens;
    for (std::size_t j = 0; j < k; ++j) {
      const auto &hyp_tokens =
          j < num_hyp ? hyp_streams[j].tokens : kEmptyTokens;
      pair_counts[i][j] = AlignWer(ref_tokens, hyp_tokens);
      cost[i][j] = static_cast<double>(pair_counts[i][j].NumErrors());
    }
  }

  const std::vector<int> assignment = SolveAssignment(cost);

  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = static_cast<std::size_t>(assignment[i]);
    const bool ref_real = i < num_ref;
    const bool hyp_real = j < num_hyp;
    if (!ref_real && !hyp_real) continue;
    result.counts += pair_counts[i][j];
    SpeakerPairCounts pair;
    pair.ref_speaker = ref_real ? ref_streams[i].speaker : "";
    pair.hyp_speaker = hyp_real ? hyp_streams[j].speaker : "";
    pair.counts = pair_counts[i][j];
    if (ref_real && hyp_real)
      result.mapping[pair.hyp_speaker] = pair.ref_speaker;
    result.per_speaker.push_back(std::move(pair));
  }

  result.undefined_rate = result.counts.ref_len == 0;
  result.cpwer = result.undefined_rate
                     ? std::numeric_limits<double>::quiet_NaN()
                     : result.counts.Wer();

  if (per_utterance != nullptr) {
    per_utterance->utterances.clear();
    for (std::size_t i = 0; i < num_ref; ++i) {
      const std::size_t j = static_cast<std::size_t>(assignment[i]);
      const Stream &rs = ref_streams[i];
      if (rs.utterance_lens.empty()) continue;
      const auto &hyp_tokens =
          j < num_hyp ? hyp_streams[j].tokens : kEmptyTokens;
      const WerAlignment alignment = AlignWerFull(rs.tokens, hyp_tokens);
      const std::vector<EditCounts> split =
          SplitCountsByUtterance(alignment, rs.utterance_lens);
      for (std::size_t u = 0; u < split.size(); ++u) {
        per_utterance->utterances.push_back({rs.speaker, static_cast<int>(u),
                                             rs.utterance_starts[u],
                                             split[u]});
      }
    }
  }
  return result;
}

}  // namespace syncscore
