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

#ifndef TREEPROP_REPORT_HPP_
#define TREEPROP_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace treeprop {

// One clause of a definition. A vacuous clause passes because nothing was
// there to check; checkers always say so.
struct Clause {
  std::string name;
  bool pass = true;
  bool vacuous = false;
  // Index labels of the first violation (one tuple, or a pair of tuples).
  std::vector<std::vector<std::string>> violating;
  std::string detail;
  std::size_t checked = 0;
};

struct Report {
  std::string check;
  bool pass = true;
  std::vector<Clause> clauses;
  std::optional<std::size_t> bound;
  std::optional<bool> exhaustive;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;

  Clause& add(std::string name) {
    clauses.emplace_back();
    clauses.back().name = std::move(name);
    return clauses.back();
  }

  const Clause* clause(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }

  const Clause* first_failure() const {
    for (const auto& c : clauses)
      if (!c.pass) return &c;
    return nullptr;
  }

  Report& finish() {
    pass = first_failure() == nullptr;
    return *this;
  }

  std::string summary() const {
    std::string out = check + ": " + (pass ? "pass" : "FAIL");
    if (const Clause* c = first_failure()) {
      out += " (clause " + c->name;
      if (!c->detail.empty()) out += ": " + c->detail;
      out += ")";
    }
    for (const auto& c : clauses)
      if (c.vacuous) out += " [" + c.name + " vacuous]";
    return out;
  }
};

}  // namespace treeprop

#endif  // TREEPROP_REPORT_HPP_
