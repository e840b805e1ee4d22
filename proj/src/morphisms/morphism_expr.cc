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

#include "twinbench/morphism_expr.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <utility>

namespace twinbench {
namespace {

ExprPtr make(MorphismExpr e) {
  return std::make_shared<const MorphismExpr>(std::move(e));
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>* known)
      : src_(src), known_(known) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < src_.size()
               ? "expected '" + std::string(1, c) + "'"
               : "expected '" + std::string(1, c) + "' before end of input");
    }
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || ptr != src_.data() + pos_) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < src_.size() &&
        (std::isalpha(static_cast<unsigned char>(src_[pos_])) ||
         src_[pos_] == '_')) {
      ++pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        ++pos_;
      }
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (accept('*')) e = MorphismExpr::compose(e, term());
    return e;
  }

  ExprPtr term() {
    ExprPtr e = primary();
    while (accept('^')) e = MorphismExpr::power(e, integer());
    return e;
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("expected an expression");
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    const std::size_t start = pos_;
    const std::string id = identifier();
    if (id.empty()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    if (id == "id") return MorphismExpr::identity();
    if (id == "beta") {
      expect('(');
      const int i = integer();
      expect(',');
      const int j = integer();
      expect(')');
      return MorphismExpr::beta(i, j);
    }
    if (id == "inv") {
      expect('(');
      ExprPtr e = expr();
      expect(')');
      return MorphismExpr::inverse(e);
    }
    if (known_ != nullptr &&
        std::find(known_->begin(), known_->end(), id) == known_->end()) {
      std::string names;
      for (const auto& n : *known_) names += (names.empty() ? "" : ", ") + n;
      throw ParseError("unknown identifier '" + id + "' (available: " +
                           names + ")",
                       start + 1);
    }
    return MorphismExpr::named(id);
  }

  std::string_view src_;
  const std::vector<std::string>* known_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr MorphismExpr::named(std::string name) {
  MorphismExpr e;
  e.kind = Kind::kNamed;
  e.name = std::move(name);
  return make(std::move(e));
}

ExprPtr MorphismExpr::compose(ExprPtr outer, ExprPtr inner) {
  MorphismExpr e;
  e.kind = Kind::kCompose;
  e.lhs = std::move(outer);
  e.rhs = std::move(inner);
  return make(std::move(e));
}

ExprPtr MorphismExpr::power(ExprPtr base, int k) {
  MorphismExpr e;
  e.kind = Kind::kPower;
  e.lhs = std::move(base);
  e.exponent = k;
  return make(std::move(e));
}

ExprPtr MorphismExpr::inverse(ExprPtr base) {
  MorphismExpr e;
  e.kind = Kind::kInverse;
  e.lhs = std::move(base);
  return make(std::move(e));
}

ExprPtr MorphismExpr::identity() { return make(MorphismExpr{}); }

ExprPtr MorphismExpr::beta(int i, int j) {
  MorphismExpr e;
  e.kind = Kind::kBeta;
  e.i = i;
  e.j = j;
  return make(std::move(e));
}

bool structurally_equal(const MorphismExpr& a, const MorphismExpr& b) {
  if (a.kind != b.kind) return false;
  using Kind = MorphismExpr::Kind;
  switch (a.kind) {
    case Kind::kNamed:
      return a.name == b.name;
    case Kind::kCompose:
      return structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
    case Kind::kPower:
      return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
    case Kind::kInverse:
      return structurally_equal(*a.lhs, *b.lhs);
    case Kind::kIdentity:
      return true;
    case Kind::kBeta:
      return a.i == b.i && a.j == b.j;
  }
  return false;
}

ExprPtr parse_morphism(std::string_view src,
                       const std::vector<std::string>* known) {
  return Parser(src, known).parse();
}

std::string print(const MorphismExpr& e) {
  using Kind = MorphismExpr::Kind;
  switch (e.kind) {
    case Kind::kNamed:
      return e.name;
    case Kind::kIdentity:
      return "id";
    case Kind::kBeta:
      return "beta(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
    case Kind::kInverse:
      return "inv(" + print(*e.lhs) + ")";
    case Kind::kPower: {
      const std::string base = print(*e.lhs);
      const bool wrap = e.lhs->kind == Kind::kCompose;
      return (wrap ? "(" + base + ")" : base) + "^" +
             std::to_string(e.exponent);
    }
    case Kind::kCompose: {
      const std::string inner = print(*e.rhs);
      const bool wrap = e.rhs->kind == Kind::kCompose;
      return print(*e.lhs) + "*" + (wrap ? "(" + inner + ")" : inner);
    }
  }
  return "?";
}

std::vector<std::string> Environment::names() const {
  std::vector<std::string> out;
  for (const auto& [name, map] : maps) out.push_back(name);
  return out;
}

MapPtr Evaluator::evaluate(std::string_view src) const {
  const auto names = env_.names();
  return evaluate(parse_morphism(src, &names));
}

MapPtr Evaluator::evaluate(const ExprPtr& expr) const {
  const std::string key = print(*expr);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  MapPtr result = evaluate_uncached(*expr);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(result)).first->second;
}

MapPtr Evaluator::evaluate_uncached(const MorphismExpr& expr) const {
  using Kind = MorphismExpr::Kind;
  switch (expr.kind) {
    case Kind::kNamed: {
      if (auto it = env_.maps.find(expr.name); it != env_.maps.end()) {
        return it->second;
      }
      std::string names;
      for (const auto& n : env_.names()) {
        names += (names.empty() ? "" : ", ") + n;
      }
      throw std::invalid_argument("unknown map '" + expr.name +
                                  "' (available: " + names + ")");
    }
    case Kind::kIdentity:
      return identity_map(env_.graph);
    case Kind::kBeta:
      if (!env_.beta) {
        throw std::invalid_argument("beta is not available for " +
                                    env_.graph->family_id());
      }
      return env_.beta(expr.i, expr.j);
    case Kind::kInverse:
      return inverse(evaluate(expr.lhs));
    case Kind::kPower:
      return power(evaluate(expr.lhs), expr.exponent);
    case Kind::kCompose:
      return compose(evaluate(expr.lhs), evaluate(expr.rhs));
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace twinbench
