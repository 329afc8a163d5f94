// core/include/syncscore/error.h

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

#ifndef SYNCSCORE_ERROR_H_
#define SYNCSCORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace syncscore {

/// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported file contents (bad WAV header, wrong codec, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON parse failure. Carries a 1-based line number when known
/// (0 when the failing location is not line-addressable).
class ParseError : public FormatError {
 public:
  explicit ParseError(const std::string &message, int line = 0)
      : FormatError(line > 0 ? "line " + std::to_string(line) + ": " + message
                             : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Invalid argument or argument combination passed to an operation.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Missing or inconsistent run configuration (e.g. a device without a
/// manifest entry).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace syncscore

#endif  // SYNCSCORE_ERROR_H_
