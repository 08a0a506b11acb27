/*
   Copyright (c) 2026 The bishard authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BISHARD_ALGO_WCC_HPP
#define BISHARD_ALGO_WCC_HPP

#include <memory>
#include <span>
#include <vector>

#include "bishard/engine/update_function.hpp"

namespace bishard {

/// Weakly connected components by label propagation: labels start as the own
/// vertex id, every update takes the minimum over the own label and all
/// in-edge labels and broadcasts it to the out-edges. Labels only decrease.
///
/// Intended for graphs sharded with reciprocal edges materialized at ingest
/// (see add_reciprocal_edges); run until no label changes (an L-infinity
/// tolerance of 0.5 detects that, labels being integer-valued).
std::unique_ptr<UpdateFunction> wcc_update_function();

/// Per-iteration tolerance that stops a WCC run exactly when labels
/// stabilize.
inline constexpr double kWccStableTolerance = 0.5;

/// Union-find oracle over the undirected interpretation of the edges:
/// label(v) = smallest vertex id in v's component.
std::vector<vid_t> wcc_oracle(std::span<const Edge> edges, std::uint64_t vertex_count);

}  // namespace bishard

#endif  // BISHARD_ALGO_WCC_HPP
