// tools/tool-common.h

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

#ifndef SYNCSCORE_TOOLS_TOOL_COMMON_H_
#define SYNCSCORE_TOOLS_TOOL_COMMON_H_

#include <string>

namespace syncscore {
namespace tools {

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, const std::string &content);

struct OutputOptions {
  std::string format = "table";  // "table" or "json"
  std::string out_path;          // empty = stdout
};

/// Writes the report in the selected format to --out or stdout.
void EmitReport(const OutputOptions &opts, const std::string &json_text,
                const std::string &table_text);

}  // namespace tools
}  // namespace syncscore

#endif  // SYNCSCORE_TOOLS_TOOL_COMMON_H_
