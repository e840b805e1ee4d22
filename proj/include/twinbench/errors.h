// Copyright 2026 The Twinbench Authors.
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

#ifndef TWINBENCH_ERRORS_H_
#define TWINBENCH_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "twinbench/vertex.h"

namespace twinbench {

// Vertex term whose tag or coordinate arity is not part of a family's
// universe. Distinct from "well-formed but not a member".
class MalformedVertex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed vertex was passed where membership is a precondition.
class NotAMember : public std::invalid_argument {
 public:
  NotAMember(const std::string& what, VertexId v)
      : std::invalid_argument(what), vertex_(std::move(v)) {}
  const VertexId& vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

// Composition of maps whose underlying families differ.
class FamilyMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction failed a checkable precondition; carries the offending
// vertex (and a second one for pair violations) when there is one.
class WitnessError : public std::runtime_error {
 public:
  WitnessError(const std::string& what, std::optional<VertexId> first = {},
               std::optional<VertexId> second = {})
      : std::runtime_error(what),
        first_(std::move(first)),
        second_(std::move(second)) {}
  const std::optional<VertexId>& first() const { return first_; }
  const std::optional<VertexId>& second() const { return second_; }

 private:
  std::optional<VertexId> first_;
  std::optional<VertexId> second_;
};

// Deficiency certificates only apply when Q is finite.
class InapplicableCertificate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twinbench

#endif  // TWINBENCH_ERRORS_H_
