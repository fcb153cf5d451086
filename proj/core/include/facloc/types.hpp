// Copyright 2026 The facloc Authors
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

#ifndef FACLOC_TYPES_HPP
#define FACLOC_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace facloc {

/// Exact money amounts. All arithmetic on costs, prices and payoffs is
/// integral; there is no floating point anywhere in the computation path.
using Money = std::int64_t;

/// 1-based vertex identifier.
using VertexId = std::int32_t;

/// Units of goods demanded or served.
using Quantity = std::int64_t;

/// Malformed input (bad JSON, wrong field types, unknown keys).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally well-formed input violating a model invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The network has at least two mutually unreachable vertices.
class DisconnectedNetworkError : public ValidationError {
 public:
  explicit DisconnectedNetworkError(const std::string& what)
      : ValidationError(what) {}
};

}  // namespace facloc

#endif  // FACLOC_TYPES_HPP
