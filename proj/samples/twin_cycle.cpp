// Copyright 2026 The ecdel Authors
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


// Walks through the alternating-twin 4-cycle: occurrence detection, colored
// neighborhood classes, and why bundle-consistent solving is refused for a
// non-diverse cycle pattern while plain branching still finds the optimum.

#include <iostream>

#include "ecdel/classify.hpp"
#include "ecdel/graph.hpp"
#include "ecdel/pattern.hpp"
#include "ecdel/solve.hpp"

int main() {
  using namespace ecdel;
  const auto g = parse_graph("p ecg 4 4 2\ne 1 3 1\ne 2 3 1\ne 1 4 2\ne 2 4 2\n");
  const auto spec = PatternSpec::cycle(4, 2);

  std::cout << "pattern: " << to_string(spec) << '\n';
  for (const auto& occ : enumerate(g, spec)) {
    std::cout << "occurrence: " << format_occurrence(occ) << '\n';
  }

  const auto classes = colored_classes(g);
  std::cout << "classes: " << classes.gamma() << " of " << g.n() << " vertices\n";
  std::cout << "pattern color-diverse: " << (spec_is_color_diverse(spec) ? "yes" : "no") << '\n';

  try {
    cnd_optimize(g, spec, Limits{});
  } catch (const Error& e) {
    std::cout << "cnd refused: " << e.what() << '\n';
  }

  const auto best = branch_optimize(g, spec, BranchOptions{});
  std::cout << "optimum: " << best.solution.size() << " edge(s)";
  for (const auto& e : best.solution) std::cout << " {" << e.u + 1 << "," << e.v + 1 << "}";
  std::cout << '\n';
  return 0;
}
