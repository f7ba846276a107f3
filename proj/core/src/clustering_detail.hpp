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

#ifndef CONVEXA_SRC_CLUSTERING_DETAIL_HPP_
#define CONVEXA_SRC_CLUSTERING_DETAIL_HPP_

#include <cstdint>
#include <span>

namespace convexa::detail {

// Local clustering of a node with `triangles` triangles and degree `k`.
inline double local_clustering(std::int64_t triangles, std::int64_t k) {
  if (k < 2) return 0.0;
  return 2.0 * static_cast<double>(triangles) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

// Transitivity from the triangle count summed over nodes (3 per triangle)
// and the number of connected triples.
inline double transitivity(std::int64_t node_triangles, std::int64_t triples) {
  if (triples == 0) return 0.0;
  return static_cast<double>(node_triangles) / static_cast<double>(triples);
}

// Mean local clustering, summed in node order.
inline double average_local(std::span<const std::int64_t> triangles,
                            std::span<const std::int64_t> degrees) {
  if (triangles.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t v = 0; v < triangles.size(); ++v) {
    sum += local_clustering(triangles[v], degrees[v]);
  }
  return sum / static_cast<double>(triangles.size());
}

}  // namespace convexa::detail

#endif  // CONVEXA_SRC_CLUSTERING_DETAIL_HPP_
