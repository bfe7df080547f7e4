// Copyright 2026 The qcrack Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types shared by all qcrack modules.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qcrack {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Register size outside the supported range.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Invalid arguments: bad indices, shape mismatches, nonpositive steps.
class ArgumentError : public Error {
  public:
    using Error::Error;
};

/// Malformed data values (NaN inputs, bad labels, bad bitstrings).
class DataError : public Error {
  public:
    using Error::Error;
};

/// Malformed files (PGM headers, ragged CSV rows, bad JSON documents).
class FormatError : public Error {
  public:
    using Error::Error;
};

/// Missing or unwritable files.
class IoError : public Error {
  public:
    using Error::Error;
};

/// Requested combination is not supported, e.g. backprop with shots.
class CapabilityError : public Error {
  public:
    using Error::Error;
};

/// Measured call counts disagree with the closed-form prediction.
class ReconciliationError : public Error {
  public:
    using Error::Error;
};

} // namespace qcrack
