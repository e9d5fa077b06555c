// Copyright 2026 The Reprolint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REPROLINT_ERROR_H_
#define REPROLINT_ERROR_H_

#include <stdexcept>
#include <string>

namespace reprolint {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "bug" catch InputError vs. everything else.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a documented contract (malformed files, bad flags).
class InputError : public Error {
 public:
  using Error::Error;
};

class EmptyReportError : public InputError {
 public:
  EmptyReportError() : InputError("empty report: no text to analyze") {}
};

class ModelError : public InputError {
 public:
  using InputError::InputError;
};

class ConfigError : public InputError {
 public:
  using InputError::InputError;
};

class LabelFileError : public InputError {
 public:
  using InputError::InputError;
};

class IllegalEventError : public Error {
 public:
  using Error::Error;
};

class ForeignCheckpointError : public Error {
 public:
  ForeignCheckpointError()
      : Error("checkpoint was captured from a different session") {}
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

// Simulated execution reached a screen whose signature differs from the one
// the execution graph predicted.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace reprolint

#endif  // REPROLINT_ERROR_H_
