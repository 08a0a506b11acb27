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

#ifndef BISHARD_TYPES_HPP
#define BISHARD_TYPES_HPP

#include <compare>
#include <cstdint>

namespace bishard {

/// Dense vertex id. Ids are contiguous 0..n-1 after ingest.
using vid_t = std::uint32_t;

/// A directed edge over dense vertex ids.
struct Edge {
    vid_t src;
    vid_t dst;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Per-graph statistics computed over the remapped edge stream.
struct GraphStats {
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::uint32_t max_out_degree = 0;
    std::uint32_t max_in_degree = 0;

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

}  // namespace bishard

#endif  // BISHARD_TYPES_HPP
