// Copyright 2026 The treeprop Authors
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

#ifndef TREEPROP_ERROR_HPP_
#define TREEPROP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeprop {

// Contract violations and malformed inputs. Checkers never throw for a
// property that merely fails; they return a Report instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A JSON document that parses but does not match the expected shape.
// `path` is a JSONPath-like locator such as "$.index.height".
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Text that is not JSON at all; `position` is the byte offset reported by
// the parser.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at byte " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace treeprop

#endif  // TREEPROP_ERROR_HPP_
