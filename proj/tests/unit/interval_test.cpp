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

#include <doctest.h>

#include "bishard/error.hpp"
#include "bishard/gen/synthetic.hpp"
#include "bishard/shard/interval.hpp"

using namespace bishard;

namespace {

std::vector<std::uint32_t> degrees_of(const std::vector<std::uint32_t>& v) { return v; }

}  // namespace

TEST_CASE("uniform split with P=2") {
    auto intervals = partition_intervals(degrees_of({1, 1, 1, 1}), PartitionPolicy::by_count(2));
    REQUIRE(intervals.size() == 2);
    CHECK(intervals[0] == IntervalRange{0, 0, 1});
    CHECK(intervals[1] == IntervalRange{1, 2, 3});
}

TEST_CASE("P=1 yields a single covering interval") {
    auto intervals = partition_intervals(degrees_of({1, 1}), PartitionPolicy::by_count(1));
    REQUIRE(intervals.size() == 1);
    CHECK(intervals[0] == IntervalRange{0, 0, 1});
}

TEST_CASE("count policy always produces exactly P non-empty covering intervals") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t n = 1 + rng.next_below(40);
        std::vector<std::uint32_t> deg(n);
        for (auto& d : deg) d = static_cast<std::uint32_t>(rng.next_below(9));
        std::uint32_t p = 1 + static_cast<std::uint32_t>(rng.next_below(n));
        auto intervals = partition_intervals(deg, PartitionPolicy::by_count(p));
        CHECK(intervals.size() == p);
        CHECK(intervals_valid(intervals, n));
    }
}

TEST_CASE("count policy closes an interval at ceil(m/P) in-edges") {
    // m=8, P=2, target=4: vertices 0..2 accumulate 1+2+1=4.
    auto intervals =
        partition_intervals(degrees_of({1, 2, 1, 3, 1}), PartitionPolicy::by_count(2));
    REQUIRE(intervals.size() == 2);
    CHECK(intervals[0] == IntervalRange{0, 0, 2});
    CHECK(intervals[1] == IntervalRange{1, 3, 4});
}

TEST_CASE("count policy rejects P of 0 or above n") {
    for (std::uint32_t p : {0u, 5u}) {
        try {
            partition_intervals(degrees_of({1, 1, 1, 1}), PartitionPolicy::by_count(p));
            FAIL_CHECK("expected bad_partition for P=" << p);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::bad_partition);
        }
    }
}

TEST_CASE("budget policy closes before exceeding the budget") {
    auto intervals = partition_intervals(degrees_of({5, 1, 1, 1}), PartitionPolicy::by_budget(5));
    REQUIRE(intervals.size() == 2);
    CHECK(intervals[0] == IntervalRange{0, 0, 0});
    CHECK(intervals[1] == IntervalRange{1, 1, 3});
}

TEST_CASE("budget policy greedy fill is maximal") {
    // Oracle: every interval fits the budget and closing any later would not.
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t n = 1 + rng.next_below(30);
        std::vector<std::uint32_t> deg(n);
        std::uint64_t max_deg = 0;
        for (auto& d : deg) {
            d = static_cast<std::uint32_t>(rng.next_below(6));
            max_deg = std::max<std::uint64_t>(max_deg, d);
        }
        std::uint64_t budget = std::max<std::uint64_t>(max_deg, 1 + rng.next_below(10));
        auto intervals = partition_intervals(deg, PartitionPolicy::by_budget(budget));
        CHECK(intervals_valid(intervals, n));
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            std::uint64_t load = 0;
            for (vid_t v = intervals[i].first_vertex; v <= intervals[i].last_vertex; ++v)
                load += deg[v];
            CHECK(load <= budget);
            // Greedy maximality: the next vertex would not have fit.
            if (i + 1 < intervals.size())
                CHECK(load + deg[intervals[i + 1].first_vertex] > budget);
        }
    }
}

TEST_CASE("budget policy rejects a vertex whose in-degree exceeds the budget") {
    try {
        partition_intervals(degrees_of({2, 9, 1}), PartitionPolicy::by_budget(5));
        FAIL_CHECK("expected budget_too_small");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::budget_too_small);
        CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
    }
}

TEST_CASE("empty degree input raises empty_graph") {
    try {
        partition_intervals(std::vector<std::uint32_t>{}, PartitionPolicy::by_count(1));
        FAIL_CHECK("expected empty_graph");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_graph);
    }
}

TEST_CASE("interval_of finds the covering interval") {
    auto intervals = partition_intervals(degrees_of({1, 1, 1, 1, 1}), PartitionPolicy::by_count(3));
    for (vid_t v = 0; v < 5; ++v) {
        std::uint32_t p = interval_of(intervals, v);
        CHECK(intervals[p].contains(v));
    }
    try {
        interval_of(intervals, 5);
        FAIL_CHECK("expected vertex_out_of_range");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::vertex_out_of_range);
    }
}
