// Copyright 2026 The BBoxCut Authors. All Rights Reserved.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bboxcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Empty image or otherwise unusable pixel data.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A configuration value outside its documented domain.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (e.g. a region outside the image).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed annotation input. `offset()` is the byte position of the fault
/// when the underlying parser reports one.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_ = 0;
};

/// Filesystem or codec failure. Always names the offending path.
class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace bboxcut
