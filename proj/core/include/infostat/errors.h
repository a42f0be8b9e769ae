// Copyright 2026 The Infostat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFOSTAT_ERRORS_H_
#define INFOSTAT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace infostat {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or usage (bad flag values, missing config fields).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (corpus files, predictions, spans).
class DataError : public Error {
 public:
  using Error::Error;
};

// A marked span plus its protected tokens cannot fit the sequence budget.
class SpanTooLongError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace infostat

#endif  // INFOSTAT_ERRORS_H_
