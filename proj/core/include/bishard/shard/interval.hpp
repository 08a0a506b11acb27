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

#ifndef BISHARD_SHARD_INTERVAL_HPP
#define BISHARD_SHARD_INTERVAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bishard/types.hpp"

namespace bishard {

/// A contiguous range of dense vertex ids, processed as one in-memory
/// subgraph. Ranges are disjoint, ordered, and cover 0..n-1 exactly.
struct IntervalRange {
    std::uint32_t index;
    vid_t first_vertex;
    vid_t last_vertex;  // inclusive

    std::uint64_t size() const {
        return static_cast<std::uint64_t>(last_vertex) - first_vertex + 1;
    }
    bool contains(vid_t v) const { return v >= first_vertex && v <= last_vertex; }

    friend bool operator==(const IntervalRange&, const IntervalRange&) = default;
};

/// Either a fixed interval count or a maximum number of in-edges per interval.
struct PartitionPolicy {
    enum class Kind { interval_count, in_edge_budget };

    static PartitionPolicy by_count(std::uint32_t count) {
        return PartitionPolicy{Kind::interval_count, count, 0};
    }
    static PartitionPolicy by_budget(std::uint64_t max_in_edges) {
        return PartitionPolicy{Kind::in_edge_budget, 0, max_in_edges};
    }

    Kind kind;
    std::uint32_t interval_count;
    std::uint64_t budget;
};

/// Splits vertices 0..n-1 into contiguous intervals balanced by in-edge count.
///
/// Count policy: an interval closes once its in-edge count reaches ceil(m/P);
/// the last interval takes the remainder. Budget policy: greedy fill, closing
/// an interval before its in-edge count would exceed the budget.
///
/// Throws empty_graph when in_degrees is empty, bad_partition when P is 0 or
/// exceeds the vertex count, budget_too_small when a single vertex's in-degree
/// exceeds the budget.
std::vector<IntervalRange> partition_intervals(std::span<const std::uint32_t> in_degrees,
                                               const PartitionPolicy& policy);

/// Index of the interval containing v. Ranges must be valid per the
/// IntervalRange invariants; v must be covered.
std::uint32_t interval_of(std::span<const IntervalRange> intervals, vid_t v);

/// Checks the IntervalRange invariants against a vertex count.
bool intervals_valid(std::span<const IntervalRange> intervals, std::uint64_t vertex_count);

}  // namespace bishard

#endif  // BISHARD_SHARD_INTERVAL_HPP
