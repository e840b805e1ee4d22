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

#ifndef TWINBENCH_MORPHISM_EXPR_H_
#define TWINBENCH_MORPHISM_EXPR_H_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twinbench/graph.h"
#include "twinbench/vertex_map.h"

namespace twinbench {

struct MorphismExpr;
using ExprPtr = std::shared_ptr<const MorphismExpr>;

// Expression tree over named maps. Compose(a, b) applies b first.
struct MorphismExpr {
  enum class Kind { kNamed, kCompose, kPower, kInverse, kIdentity, kBeta };

  Kind kind = Kind::kIdentity;
  std::string name;    // kNamed
  ExprPtr lhs;         // kCompose (outer), kPower, kInverse
  ExprPtr rhs;         // kCompose (inner)
  int exponent = 0;    // kPower
  int i = 0, j = 0;    // kBeta

  static ExprPtr named(std::string name);
  static ExprPtr compose(ExprPtr outer, ExprPtr inner);
  static ExprPtr power(ExprPtr base, int k);
  static ExprPtr inverse(ExprPtr base);
  static ExprPtr identity();
  static ExprPtr beta(int i, int j);
};

bool structurally_equal(const MorphismExpr& a, const MorphismExpr& b);

// Syntax error with a 1-based column.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " at column " + std::to_string(column)),
        column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Grammar:
//   expr    := term ('*' term)*          left associative, left is outer
//   term    := primary ('^' integer)*    integer may be negative
//   primary := identifier | 'id' | 'beta(' int ',' int ')'
//            | 'inv(' expr ')' | '(' expr ')'
// With `known` set, identifiers outside it are rejected and the error lists
// the available names.
ExprPtr parse_morphism(std::string_view src,
                       const std::vector<std::string>* known = nullptr);

// Canonical text; parse_morphism(print(e)) is structurally equal to e.
std::string print(const MorphismExpr& e);

// Names and generators an expression is evaluated against.
struct Environment {
  GraphPtr graph;
  std::map<std::string, MapPtr> maps;
  std::function<MapPtr(int, int)> beta;

  std::vector<std::string> names() const;
};

// Evaluates expressions to maps, memoizing by canonical text. Thread safe.
class Evaluator {
 public:
  explicit Evaluator(Environment env) : env_(std::move(env)) {}

  MapPtr evaluate(const ExprPtr& expr) const;
  MapPtr evaluate(std::string_view src) const;
  const Environment& environment() const { return env_; }

 private:
  MapPtr evaluate_uncached(const MorphismExpr& expr) const;

  Environment env_;
  mutable std::mutex mu_;
  mutable std::map<std::string, MapPtr> cache_;
};

}  // namespace twinbench

#endif  // TWINBENCH_MORPHISM_EXPR_H_
