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

#include <fstream>
#include <map>

#include "bishard/error.hpp"
#include "bishard/gen/synthetic.hpp"
#include "bishard/ingest/edge_list.hpp"
#include "bishard/shard/format.hpp"
#include "bishard/storage/interval_store.hpp"
#include "test_util.hpp"

using namespace bishard;
using bishard::testing::TempDir;

TEST_CASE("load_interval rebuilds the two-cycle subgraph") {
    TempDir dir;
    std::vector<Edge> edges{{0, 1}, {1, 0}};
    IntervalStore store(testing::shard_graph(edges, 2, 2, dir.path()));

    IntervalSubgraph sub = store.load_interval(0);
    CHECK(sub.vertex_count() == 1);
    REQUIRE(sub.in_edges(0).size() == 1);
    CHECK(sub.in_edges(0)[0].src == 1);
    CHECK(sub.in_edges(0)[0].value == 0.0f);
    REQUIRE(sub.out_degree(0) == 1);
    CHECK(sub.out_target(0, 0) == 1);
}

TEST_CASE("every interval load costs exactly two edge-shard reads and one vertex access") {
    TempDir dir;
    auto remap = remap_ids(random_edge_list(40, 200, 17));
    IntervalStore store(testing::shard_graph(remap.edges, remap.stats.vertex_count, 5, dir.path()));

    store.reset_metrics();
    for (std::uint32_t p = 0; p < 5; ++p) {
        IoMetrics before = store.snapshot_metrics();
        store.load_interval(p);
        IoMetrics after = store.snapshot_metrics();
        CHECK(after.edge_shard_nonseq_reads - before.edge_shard_nonseq_reads == 2);
        CHECK(after.vertex_file_accesses - before.vertex_file_accesses == 1);
    }
    CHECK(store.snapshot_metrics().edge_shard_nonseq_reads == 10);
}

TEST_CASE("an interval without edges still costs two header reads") {
    TempDir dir;
    // Vertex 2 has no incident edges; with P=3 it forms an empty interval.
    std::vector<Edge> edges{{0, 1}, {1, 0}};
    IntervalStore store(testing::shard_graph(edges, 3, 3, dir.path()));

    store.reset_metrics();
    IntervalSubgraph sub = store.load_interval(2);
    CHECK(sub.in_edges(2).empty());
    CHECK(sub.out_degree(2) == 0);
    CHECK(store.snapshot_metrics().edge_shard_nonseq_reads == 2);
}

TEST_CASE("write_back places an out-edge value into the target in-shard") {
    TempDir dir;
    std::vector<Edge> edges{{0, 1}, {1, 0}};
    IntervalStore store(testing::shard_graph(edges, 2, 2, dir.path()));

    IntervalSubgraph sub = store.load_interval(0);
    sub.write_out_edge(0, 0, 0.85f);
    store.write_back(0, sub);

    auto in1 = read_in_shard(store.manifest().in_shard(1));
    REQUIRE(in1.size() == 1);
    CHECK(in1[0] == InShardRecord{0, 1, 0.85f});
}

TEST_CASE("write_back of an interval without out-edges issues no scatter writes") {
    TempDir dir;
    // Vertex 2 only receives; interval {2} has an empty out-shard.
    std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 2}};
    IntervalStore store(testing::shard_graph(edges, 3, 3, dir.path()));

    IntervalSubgraph sub = store.load_interval(2);
    store.reset_metrics();
    store.write_back(2, sub);
    CHECK(store.snapshot_metrics().scatter_nonseq_writes == 0);
}

TEST_CASE("scatter write count equals the number of non-empty target blocks") {
    TempDir dir;
    // All-pairs digraph: every (p, q) block is non-empty for any partition.
    auto dense = testing::to_dense(all_pairs_edge_list(8));
    IntervalStore store(testing::shard_graph(dense, 8, 4, dir.path()));

    store.reset_metrics();
    for (std::uint32_t p = 0; p < 4; ++p) {
        IntervalSubgraph sub = store.load_interval(p);
        for (vid_t v = sub.range().first_vertex; v <= sub.range().last_vertex; ++v)
            for (std::uint32_t i = 0; i < sub.out_degree(v); ++i)
                sub.write_out_edge(v, i, 1.0f);
        store.write_back(p, sub);
    }
    CHECK(store.snapshot_metrics().scatter_nonseq_writes == 16);
}

TEST_CASE("write_back round trip: a later load observes the written values") {
    TempDir dir;
    auto remap = remap_ids(random_edge_list(20, 50, 23));
    const std::uint64_t n = remap.stats.vertex_count;
    IntervalStore store(testing::shard_graph(remap.edges, n, 4, dir.path()));

    // Stamp every out-edge with a value derived from its source and slot, and
    // every vertex with its id; compare against an in-memory model.
    for (std::uint32_t p = 0; p < 4; ++p) {
        IntervalSubgraph sub = store.load_interval(p);
        for (vid_t v = sub.range().first_vertex; v <= sub.range().last_vertex; ++v) {
            sub.set_vertex_value(v, static_cast<float>(v) + 0.5f);
            for (std::uint32_t i = 0; i < sub.out_degree(v); ++i)
                sub.write_out_edge(v, i, static_cast<float>(v * 131 + i));
        }
        store.write_back(p, sub);
    }

    // In-memory model: the k-th out-edge of v (in (dst, input) order) carries
    // v*131+k. Re-scan all in-shards and group records per source.
    std::map<vid_t, std::vector<std::pair<vid_t, float>>> by_src;
    for (std::uint32_t q = 0; q < 4; ++q)
        for (const InShardRecord& r : read_in_shard(store.manifest().in_shard(q)))
            by_src[r.src].push_back({r.dst, r.value});

    std::vector<std::vector<vid_t>> out_lists(n);
    {
        std::vector<Edge> sorted = remap.edges;
        std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
            if (a.src != b.src) return a.src < b.src;
            return a.dst < b.dst;
        });
        for (const Edge& e : sorted) out_lists[e.src].push_back(e.dst);
    }
    for (auto& [src, records] : by_src) {
        std::sort(records.begin(), records.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        REQUIRE(records.size() == out_lists[src].size());
        for (std::size_t k = 0; k < records.size(); ++k)
            CHECK(records[k].second == static_cast<float>(src * 131 + k));
    }

    // Vertex values persisted through the value file.
    auto values = read_value_file(store.manifest().value_path(), n);
    for (std::uint64_t v = 0; v < n; ++v) CHECK(values[v] == static_cast<float>(v) + 0.5f);

    // And a fresh load observes them.
    IntervalSubgraph sub = store.load_interval(0);
    vid_t first = sub.range().first_vertex;
    CHECK(sub.vertex_value(first) == static_cast<float>(first) + 0.5f);
}

TEST_CASE("a block write never touches bytes outside its extent") {
    TempDir dir;
    auto dense = testing::to_dense(all_pairs_edge_list(6));
    IntervalStore store(testing::shard_graph(dense, 6, 3, dir.path()));

    // Write back only interval 1; blocks (1, q) change, everything else must
    // stay byte-identical.
    IntervalSubgraph sub = store.load_interval(1);
    for (vid_t v = sub.range().first_vertex; v <= sub.range().last_vertex; ++v)
        for (std::uint32_t i = 0; i < sub.out_degree(v); ++i) sub.write_out_edge(v, i, 7.0f);

    auto read_bytes = [&](std::uint32_t q) {
        std::ifstream in(store.manifest().in_shard(q), std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    };
    std::vector<std::string> before{read_bytes(0), read_bytes(1), read_bytes(2)};
    store.write_back(1, sub);

    for (std::uint32_t q = 0; q < 3; ++q) {
        std::string after = read_bytes(q);
        const BlockExtent& extent = store.manifest().blocks.at(1, q);
        REQUIRE(after.size() == before[q].size());
        for (std::size_t i = 0; i < after.size(); ++i) {
            bool inside = i >= extent.offset && i < extent.offset + extent.length;
            if (!inside) CHECK(after[i] == before[q][i]);
        }
    }
}

TEST_CASE("unwritten out-edge slots re-persist their on-disk values") {
    TempDir dir;
    std::vector<Edge> edges{{0, 2}, {0, 3}, {1, 2}, {2, 0}, {3, 1}};
    std::vector<IntervalRange> intervals{{0, 0, 1}, {1, 2, 3}};
    IntervalStore store(build_shards(edges, 4, intervals, dir.path()));

    // Seed all edge values via a full write pass.
    for (std::uint32_t p = 0; p < 2; ++p) {
        IntervalSubgraph sub = store.load_interval(p);
        for (vid_t v = sub.range().first_vertex; v <= sub.range().last_vertex; ++v)
            for (std::uint32_t i = 0; i < sub.out_degree(v); ++i)
                sub.write_out_edge(v, i, static_cast<float>(100 * v + i));
        store.write_back(p, sub);
    }
    auto before_in0 = read_in_shard(store.manifest().in_shard(0));
    auto before_in1 = read_in_shard(store.manifest().in_shard(1));

    // Partial update: vertex 0 writes only its first slot.
    IntervalSubgraph sub = store.load_interval(0);
    sub.write_out_edge(0, 0, 555.0f);
    store.write_back(0, sub);

    auto after_in1 = read_in_shard(store.manifest().in_shard(1));
    for (std::size_t i = 0; i < after_in1.size(); ++i) {
        if (after_in1[i].src == 0 && after_in1[i].dst == 2)
            CHECK(after_in1[i].value == 555.0f);
        else
            CHECK(after_in1[i] == before_in1[i]);
    }
    CHECK(read_in_shard(store.manifest().in_shard(0)) == before_in0);
}

TEST_CASE("identity write_back keeps all shard bytes intact") {
    TempDir dir;
    auto remap = remap_ids(random_edge_list(15, 60, 29));
    IntervalStore store(
        testing::shard_graph(remap.edges, remap.stats.vertex_count, 3, dir.path()));

    auto read_bytes = [&](std::uint32_t q) {
        std::ifstream in(store.manifest().in_shard(q), std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    };
    std::vector<std::string> before{read_bytes(0), read_bytes(1), read_bytes(2)};
    for (std::uint32_t p = 0; p < 3; ++p) {
        IntervalSubgraph sub = store.load_interval(p);
        store.write_back(p, sub);  // nothing written
    }
    for (std::uint32_t q = 0; q < 3; ++q) CHECK(read_bytes(q) == before[q]);
}

TEST_CASE("metrics reset zeroes all counters") {
    TempDir dir;
    IntervalStore store(testing::shard_graph(std::vector<Edge>{{0, 1}, {1, 0}}, 2, 2, dir.path()));
    store.load_interval(0);
    store.reset_metrics();
    CHECK(store.snapshot_metrics() == IoMetrics{});
}

TEST_CASE("a truncated in-shard surfaces as corrupt") {
    TempDir dir;
    auto manifest = testing::shard_graph(std::vector<Edge>{{0, 1}, {1, 0}}, 2, 2, dir.path());
    std::filesystem::resize_file(manifest.in_shard(0), 20);
    IntervalStore store(std::move(manifest));
    try {
        store.load_interval(0);
        FAIL_CHECK("expected corrupt_shard");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::corrupt_shard);
    }
}

TEST_CASE("write_back with a tampered block length reports offset_mismatch") {
    TempDir dir;
    auto manifest = testing::shard_graph(std::vector<Edge>{{0, 1}, {1, 0}}, 2, 2, dir.path());
    IntervalStore store(std::move(manifest));
    IntervalSubgraph sub = store.load_interval(0);

    GraphManifest tampered = store.manifest();
    tampered.blocks.at(0, 1).length += kInRecordBytes;
    IntervalStore broken(std::move(tampered));
    sub.write_out_edge(0, 0, 1.0f);
    try {
        broken.write_back(0, sub);
        FAIL_CHECK("expected offset_mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::offset_mismatch);
    }
}
