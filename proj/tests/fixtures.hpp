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


// Small reference graphs in ECG text (vertex ids 1-based).

#pragma once

#include <string>

#include "ecdel/graph.hpp"

namespace ecdel::fixture {

/// Alternating-twin C4: u=1, v=2, w=3, x=4; blue u-w, v-w; red u-x, v-x.
inline const std::string kTwinCycle =
    "p ecg 4 4 2\ne 1 3 1\ne 2 3 1\ne 1 4 2\ne 2 4 2\n";

/// Fence: blue K3 {1,2,3}, blue K4 {4,5,6,7}, red 3-6 and 1-4.
inline const std::string kFenceK3K4 =
    "p ecg 7 11 2\n"
    "e 1 2 1\ne 1 3 1\ne 2 3 1\n"
    "e 4 5 1\ne 4 6 1\ne 4 7 1\ne 5 6 1\ne 5 7 1\ne 6 7 1\n"
    "e 3 6 2\ne 1 4 2\n";

/// Clique-star: red K4 {1,2,3,4}; blue triangle {2,5,6}; blue edge 4-7;
/// blue K4 {3,8,9,10}.
inline const std::string kCliqueStar =
    "p ecg 10 16 2\n"
    "e 1 2 2\ne 1 3 2\ne 1 4 2\ne 2 3 2\ne 2 4 2\ne 3 4 2\n"
    "e 2 5 1\ne 2 6 1\ne 5 6 1\n"
    "e 4 7 1\n"
    "e 3 8 1\ne 3 9 1\ne 3 10 1\ne 8 9 1\ne 8 10 1\ne 9 10 1\n";

/// Bicolored 5-vertex graph: x=1, y=2, w=3, u=4, v=5; red triangle x,y,w;
/// blue w-u, w-v.
inline const std::string kBicolored5 =
    "p ecg 5 5 2\ne 1 2 2\ne 1 3 2\ne 2 3 2\ne 3 4 1\ne 3 5 1\n";

inline ColoredGraph load(const std::string& text) { return parse_graph(text); }

}  // namespace ecdel::fixture
