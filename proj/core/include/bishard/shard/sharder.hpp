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

#ifndef BISHARD_SHARD_SHARDER_HPP
#define BISHARD_SHARD_SHARDER_HPP

#include <filesystem>
#include <span>
#include <vector>

#include "bishard/shard/manifest.hpp"

namespace bishard {

/// Computes per-vertex in-degrees for partition_intervals.
std::vector<std::uint32_t> in_degrees(std::span<const Edge> edges, std::uint64_t vertex_count);

/// Materializes the dual shard files for the given intervals under `dir`:
/// in-shard(p) holds every edge whose destination is in interval p, out-shard(p)
/// every edge whose source is, both sorted by (source, destination, input
/// order). In-shard edge values start at 0.0. Also writes the out-degree file
/// and a zeroed vertex-value file, and returns the manifest (not yet written
/// to disk; see write_manifest).
///
/// Shard builds are byte-deterministic for a given edge sequence.
GraphManifest build_shards(std::span<const Edge> edges, std::uint64_t vertex_count,
                           const std::vector<IntervalRange>& intervals,
                           const std::filesystem::path& dir);

}  // namespace bishard

#endif  // BISHARD_SHARD_SHARDER_HPP
