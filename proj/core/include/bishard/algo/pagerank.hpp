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

#ifndef BISHARD_ALGO_PAGERANK_HPP
#define BISHARD_ALGO_PAGERANK_HPP

#include <memory>
#include <span>
#include <vector>

#include "bishard/engine/update_function.hpp"

namespace bishard {

/// Damping-factor parameters; base() is 1 - damping by construction.
struct PageRankParams {
    double damping = 0.85;

    double base() const { return 1.0 - damping; }
};

/// The classic unnormalized kernel: value <- base + damping * sum(in-edge
/// values); each out-edge slot <- value / out-degree. Vertices start at 1.0,
/// edges at 1/out-degree. Vertices with out-degree 0 propagate nothing.
std::unique_ptr<UpdateFunction> pagerank_update_function(PageRankParams params = {});

/// Independent in-memory oracle: synchronous iteration of the identical
/// kernel in double precision, summing in-edges by ascending source. Stops
/// once the L-infinity delta drops below `tolerance`; throws
/// Error(no_convergence) after max_iterations.
std::vector<double> pagerank_oracle(std::span<const Edge> edges, std::uint64_t vertex_count,
                                    PageRankParams params, double tolerance,
                                    std::uint32_t max_iterations = 10000);

}  // namespace bishard

#endif  // BISHARD_ALGO_PAGERANK_HPP
