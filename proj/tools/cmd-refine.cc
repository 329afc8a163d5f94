// tools/cmd-refine.cc

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

#include "commands.h"
#include "syncscore/ctm.h"
#include "syncscore/refine.h"
#include "syncscore/rttm.h"

namespace syncscore {
namespace tools {

void RunRefineCommand(const RefineCommandOptions &opts) {
  const auto words = ParseCtm(ReadFile(opts.ctm_path));
  const RefineResult result = RefineWordsToUtterances(words, opts.gap);
  WriteFile(opts.out_path, EmitRttm(ToRttm(result.segments)));
  for (const std::string &warning : result.warnings)
    std::cerr << "warning: " << warning << "\n";
  std::cout << "wrote " << result.segments.size() << " segments to "
            << opts.out_path << "\n";
}

}  // namespace tools
}  // namespace syncscore
