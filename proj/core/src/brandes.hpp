// Copyright 2026 The Convexa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVEXA_SRC_BRANDES_HPP_
#define CONVEXA_SRC_BRANDES_HPP_

#include <vector>

#include "convexa/graph.hpp"

namespace convexa::detail {

// Exact unweighted shortest-path betweenness over unordered pairs. Either
// output may be null. Sources are processed in id order so the floating-point
// sums are reproducible.
void brandes(const Graph& g, std::vector<double>* node_scores,
             std::vector<double>* edge_scores);

}  // namespace convexa::detail

#endif  // CONVEXA_SRC_BRANDES_HPP_
