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

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "twinbench/families.h"

namespace twinbench {
namespace {

struct Registry {
  std::once_flag once;
  std::map<std::string, FamilyBundle> bundles;
};

Registry& registry() {
  static Registry r;
  std::call_once(r.once, [] {
    r.bundles.emplace("extended-star", extended_star());
    r.bundles.emplace("clique-chain", clique_chain());
    r.bundles.emplace("ray", ray());
  });
  return r;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"extended-star",
                                                 "clique-chain", "ray"};
  return names;
}

const FamilyBundle& family_bundle(const std::string& name) {
  const auto& bundles = registry().bundles;
  if (auto it = bundles.find(name); it != bundles.end()) return it->second;
  std::string known;
  for (const auto& n : family_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown family '" + name + "' (available: " +
                              known + ")");
}

}  // namespace twinbench
