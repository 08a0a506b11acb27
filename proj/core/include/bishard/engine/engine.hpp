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

#ifndef BISHARD_ENGINE_ENGINE_HPP
#define BISHARD_ENGINE_ENGINE_HPP

#include "bishard/engine/update_function.hpp"
#include "bishard/storage/interval_store.hpp"

namespace bishard {

struct RunConfig {
    std::uint32_t max_iterations = 1;
    /// L-infinity threshold on vertex-value change per iteration; 0 disables
    /// the convergence check.
    double convergence_tolerance = 0.0;
    /// 0 = one worker per hardware thread.
    std::uint32_t worker_count = 0;
    bool init_pass = true;
};

struct RunReport {
    std::uint32_t iterations = 0;
    double final_delta = 0.0;
    double wall_seconds = 0.0;
    IoMetrics io;
};

/// One pass of load / assign initial values / write-back: afterwards every
/// vertex value equals init_vertex(v) and every in-shard edge value equals
/// init_out_edge(src, dst).
void run_init_pass(IntervalStore& store, const UpdateFunction& update_function);

/// Runs the update function once for every vertex of the loaded interval.
/// Workers own disjoint contiguous vertex subranges; results are bit-identical
/// for every worker_count >= 1. A throwing update surfaces as
/// Error(update_failed) naming the lowest offending vertex.
void run_interval(IntervalSubgraph& subgraph, const UpdateFunction& update_function,
                  std::uint32_t worker_count);

/// Full execution: optional init pass, then iterations visiting intervals in
/// ascending order, each as load -> parallel update -> write-back. Because
/// interval p is written back before p+1 loads, updates flow to
/// later-numbered intervals within the same iteration. Stops after
/// max_iterations or once the per-iteration L-infinity vertex delta drops
/// below the tolerance.
RunReport run(IntervalStore& store, const UpdateFunction& update_function,
              const RunConfig& config);

}  // namespace bishard

#endif  // BISHARD_ENGINE_ENGINE_HPP
