// core/include/syncscore/wer.h

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

#ifndef SYNCSCORE_WER_H_
#define SYNCSCORE_WER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace syncscore {

/// Minimal-edit-distance counts of one alignment.
/// Invariant: hits + substitutions + deletions == ref_len.
struct EditCounts {
  std::int64_t substitutions = 0;
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t hits = 0;
  std::int64_t ref_len = 0;

  std::int64_t NumErrors() const {
    return substitutions + insertions + deletions;
  }
  /// WER as a ratio; meaningless when ref_len == 0 (check Undefined()).
  double Wer() const {
    return ref_len > 0 ? static_cast<double>(NumErrors()) / ref_len : 0.0;
  }
  bool Undefined() const { return ref_len == 0 && NumErrors() > 0; }

  EditCounts &operator+=(const EditCounts &other);
  bool operator==(const EditCounts &) const = default;
};

enum class EditOp : std::uint8_t { kHit, kSubstitution, kInsertion, kDeletion };

/// Edit counts plus the operation sequence of the chosen minimal alignment
/// (reference order; insertions appear before the reference position they
/// precede).
struct WerAlignment {
  EditCounts counts;
  std::vector<EditOp> ops;
};

/// Minimal Levenshtein edit counts with unit costs. Ties are broken
/// deterministically: substitution preferred over insertion+deletion pairs,
/// then reference words consumed as early as possible.
EditCounts AlignWer(std::span<const std::string> ref,
                    std::span<const std::string> hyp);

/// AlignWer with the full operation traceback retained.
WerAlignment AlignWerFull(std::span<const std::string> ref,
                          std::span<const std::string> hyp);

/// Re-segments an alignment by reference utterance boundaries
/// (utterance_lens are reference word counts; their sum must equal
/// counts.ref_len). Insertions at an utterance boundary are attributed to
/// the following utterance; trailing insertions go to the last utterance.
/// The per-utterance counts sum to the global counts.
std::vector<EditCounts> SplitCountsByUtterance(
    const WerAlignment &alignment, std::span<const std::int64_t> utterance_lens);

}  // namespace syncscore

#endif  // SYNCSCORE_WER_H_
