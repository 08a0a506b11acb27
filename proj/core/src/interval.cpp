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

#include "bishard/shard/interval.hpp"

#include <algorithm>
#include <string>

#include "bishard/error.hpp"

namespace bishard {

namespace {

std::vector<IntervalRange> partition_by_count(std::span<const std::uint32_t> in_degrees,
                                              std::uint32_t interval_count) {
    const std::uint64_t n = in_degrees.size();
    if (interval_count == 0 || interval_count > n)
        throw Error(ErrorKind::bad_partition,
                    "interval count " + std::to_string(interval_count) +
                        " not in [1, n=" + std::to_string(n) + "]");

    std::uint64_t m = 0;
    for (std::uint32_t d : in_degrees) m += d;
    const std::uint64_t target = (m + interval_count - 1) / interval_count;  // ceil(m/P)

    std::vector<IntervalRange> intervals;
    intervals.reserve(interval_count);
    vid_t first = 0;
    std::uint64_t acc = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        acc += in_degrees[v];
        const std::uint64_t vertices_left = n - v - 1;
        const std::uint64_t intervals_left = interval_count - intervals.size() - 1;
        const bool last_interval = intervals_left == 0;
        // Close when the target is met, or when the remaining intervals need
        // every remaining vertex. The last interval absorbs the remainder.
        if (!last_interval && (acc >= target || vertices_left == intervals_left)) {
            intervals.push_back(IntervalRange{static_cast<std::uint32_t>(intervals.size()), first,
                                              static_cast<vid_t>(v)});
            first = static_cast<vid_t>(v + 1);
            acc = 0;
        }
    }
    intervals.push_back(IntervalRange{static_cast<std::uint32_t>(intervals.size()), first,
                                      static_cast<vid_t>(n - 1)});
    return intervals;
}

std::vector<IntervalRange> partition_by_budget(std::span<const std::uint32_t> in_degrees,
                                               std::uint64_t budget) {
    const std::uint64_t n = in_degrees.size();
    std::vector<IntervalRange> intervals;
    vid_t first = 0;
    std::uint64_t acc = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        if (in_degrees[v] > budget)
            throw Error(ErrorKind::budget_too_small,
                        "vertex " + std::to_string(v) + " has in-degree " +
                            std::to_string(in_degrees[v]) + " > budget " + std::to_string(budget));
        if (v > first && acc + in_degrees[v] > budget) {
            intervals.push_back(IntervalRange{static_cast<std::uint32_t>(intervals.size()), first,
                                              static_cast<vid_t>(v - 1)});
            first = static_cast<vid_t>(v);
            acc = 0;
        }
        acc += in_degrees[v];
    }
    intervals.push_back(IntervalRange{static_cast<std::uint32_t>(intervals.size()), first,
                                      static_cast<vid_t>(n - 1)});
    return intervals;
}

}  // namespace

std::vector<IntervalRange> partition_intervals(std::span<const std::uint32_t> in_degrees,
                                               const PartitionPolicy& policy) {
    if (in_degrees.empty()) throw Error(ErrorKind::empty_graph, "no vertices to partition");
    switch (policy.kind) {
        case PartitionPolicy::Kind::interval_count:
            return partition_by_count(in_degrees, policy.interval_count);
        case PartitionPolicy::Kind::in_edge_budget:
            return partition_by_budget(in_degrees, policy.budget);
    }
    throw Error(ErrorKind::config_error, "unknown partition policy");
}

std::uint32_t interval_of(std::span<const IntervalRange> intervals, vid_t v) {
    auto it = std::upper_bound(intervals.begin(), intervals.end(), v,
                               [](vid_t value, const IntervalRange& r) {
                                   return value < r.first_vertex;
                               });
    if (it == intervals.begin())
        throw Error(ErrorKind::vertex_out_of_range, std::to_string(v));
    --it;
    if (!it->contains(v)) throw Error(ErrorKind::vertex_out_of_range, std::to_string(v));
    return it->index;
}

bool intervals_valid(std::span<const IntervalRange> intervals, std::uint64_t vertex_count) {
    if (intervals.empty() || vertex_count == 0) return false;
    vid_t expect_first = 0;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const IntervalRange& r = intervals[i];
        if (r.index != i) return false;
        if (r.first_vertex != expect_first) return false;
        if (r.last_vertex < r.first_vertex) return false;
        expect_first = r.last_vertex + 1;
    }
    return static_cast<std::uint64_t>(intervals.back().last_vertex) + 1 == vertex_count;
}

}  // namespace bishard
