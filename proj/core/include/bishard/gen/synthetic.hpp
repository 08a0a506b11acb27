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

#ifndef BISHARD_GEN_SYNTHETIC_HPP
#define BISHARD_GEN_SYNTHETIC_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "bishard/ingest/edge_list.hpp"

namespace bishard {

/// Deterministic RNG (splitmix64): identical streams on every platform, which
/// keeps generated fixtures and benchmark graphs byte-reproducible.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  private:
    std::uint64_t state_;
};

/// m edges with endpoints uniform over 0..n-1 (duplicates and self-loops
/// possible).
std::vector<RawEdge> random_edge_list(std::uint64_t vertex_count, std::uint64_t edge_count,
                                      std::uint64_t seed);

/// Complete digraph on k vertices including self-loops: k*k edges, so every
/// interval pair is connected for any contiguous partition.
std::vector<RawEdge> all_pairs_edge_list(std::uint32_t k);

/// Directed "voting network" stand-in at a chosen scale: every vertex casts
/// 13..16 votes for uniformly random other vertices, padded so the edge count
/// is met exactly. Every id 0..n-1 appears, so the remapped vertex count is
/// exactly n.
std::vector<RawEdge> vote_network_edge_list(std::uint64_t vertex_count, std::uint64_t edge_count,
                                            std::uint64_t seed);

/// Writes edges as "src dst" lines with a leading comment header, the layout
/// common to published edge-list datasets.
void write_edge_list_text(const std::filesystem::path& path,
                          const std::vector<RawEdge>& edges);

}  // namespace bishard

#endif  // BISHARD_GEN_SYNTHETIC_HPP
