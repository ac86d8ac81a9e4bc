// Copyright 2026 The dmpst Authors.
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dmpst {

/// Base class for all library errors.
class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (bad dimension, rank, index range, ...).
class ParameterError : public Error {
    using Error::Error;
};

/// Structurally valid arguments used incorrectly (scheme mismatch, empty dataset, ...).
class UsageError : public Error {
    using Error::Error;
};

/// Input/output failure (missing file, unwritable path, malformed payload, ...).
class IoError : public Error {
    using Error::Error;
};

/// A dataset is too small for the requested accuracy; carries the size that would suffice.
class InsufficientDataError : public Error {
  public:
    InsufficientDataError(const std::string &what, std::uint64_t required)
        : Error(what), required_shots(required) {}

    std::uint64_t required_shots;
};

} // namespace dmpst
