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

#include <cmath>

#include "bishard/algo/pagerank.hpp"
#include "bishard/algo/wcc.hpp"
#include "bishard/engine/engine.hpp"
#include "bishard/error.hpp"
#include "bishard/gen/synthetic.hpp"
#include "bishard/ingest/edge_list.hpp"
#include "bishard/shard/format.hpp"
#include "test_util.hpp"

using namespace bishard;
using bishard::testing::TempDir;

namespace {

std::vector<float> run_to_fixed_point(std::span<const Edge> edges, std::uint64_t n,
                                      std::uint32_t p, const UpdateFunction& fn,
                                      double tolerance, std::uint32_t max_iterations,
                                      const std::filesystem::path& dir) {
    IntervalStore store(bishard::testing::shard_graph(edges, n, p, dir));
    RunConfig config;
    config.max_iterations = max_iterations;
    config.convergence_tolerance = tolerance;
    run(store, fn, config);
    return read_value_file(store.manifest().value_path(), n);
}

}  // namespace

TEST_CASE("pagerank oracle: two-cycle fixed point is 1.0") {
    std::vector<Edge> edges{{0, 1}, {1, 0}};
    auto values = pagerank_oracle(edges, 2, PageRankParams{}, 1e-12);
    CHECK(std::abs(values[0] - 1.0) <= 1e-9);
    CHECK(std::abs(values[1] - 1.0) <= 1e-9);
}

TEST_CASE("pagerank oracle: 4-vertex star hub value is 0.5325") {
    // Leaves 1,2,3 point at 0; each leaf settles at 0.15, so the hub reads
    // 0.15 + 0.85 * (3 * 0.15) = 0.5325.
    std::vector<Edge> edges{{1, 0}, {2, 0}, {3, 0}};
    auto values = pagerank_oracle(edges, 4, PageRankParams{}, 1e-12);
    CHECK(std::abs(values[0] - 0.5325) <= 1e-9);
    for (int leaf = 1; leaf <= 3; ++leaf) CHECK(std::abs(values[leaf] - 0.15) <= 1e-9);
}

TEST_CASE("pagerank oracle throws no_convergence under an absurd cap") {
    std::vector<Edge> edges{{1, 0}, {2, 0}, {3, 0}};
    try {
        pagerank_oracle(edges, 4, PageRankParams{}, 1e-12, 1);
        FAIL_CHECK("expected no_convergence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::no_convergence);
    }
}

TEST_CASE("pagerank rejects an out-of-range damping factor") {
    try {
        pagerank_update_function(PageRankParams{1.5});
        FAIL_CHECK("expected config_error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::config_error);
    }
}

TEST_CASE("an isolated vertex settles at the base value after one update") {
    TempDir dir;
    // Vertex 2 has no in-edges.
    std::vector<Edge> edges{{2, 0}, {0, 1}, {1, 0}};
    auto pr = pagerank_update_function();
    auto values = run_to_fixed_point(edges, 3, 1, *pr, 0.0, 1, dir.path());
    CHECK(values[2] == doctest::Approx(0.15).epsilon(1e-6));
}

TEST_CASE("engine pagerank matches the oracle fixed point on random graphs") {
    SplitMix64 rng(2024);
    for (std::uint32_t p : {1u, 2u, 4u}) {
        TempDir dir;
        auto remap = remap_ids(random_edge_list(120, 360, rng.next()));
        const std::uint64_t n = remap.stats.vertex_count;
        auto pr = pagerank_update_function();
        auto engine_values =
            run_to_fixed_point(remap.edges, n, p, *pr, 1e-7, 1000, dir.path());
        auto oracle_values = pagerank_oracle(remap.edges, n, PageRankParams{}, 1e-7);
        for (std::uint64_t v = 0; v < n; ++v)
            CHECK(std::abs(engine_values[v] - oracle_values[v]) <= 1e-6);
    }
}

TEST_CASE("converged pagerank values never drop below the base") {
    TempDir dir;
    auto remap = remap_ids(random_edge_list(80, 240, 55));
    auto pr = pagerank_update_function();
    auto values = run_to_fixed_point(remap.edges, remap.stats.vertex_count, 2, *pr, 1e-7, 1000,
                                     dir.path());
    for (float v : values) CHECK(v >= 0.15f - 1e-6f);
}

TEST_CASE("wcc oracle handles edgeless and path graphs") {
    CHECK(wcc_oracle(std::vector<Edge>{}, 3) == std::vector<vid_t>{0, 1, 2});
    std::vector<Edge> path{{0, 1}, {1, 2}};
    CHECK(wcc_oracle(path, 3) == std::vector<vid_t>{0, 0, 0});
}

TEST_CASE("wcc on a two-sided path converges to the minimum label") {
    TempDir dir;
    std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
    auto fn = wcc_update_function();
    auto labels = run_to_fixed_point(edges, 3, 2, *fn, kWccStableTolerance, 10, dir.path());
    CHECK(labels == std::vector<float>{0.0f, 0.0f, 0.0f});
}

TEST_CASE("wcc separates two disjoint 2-cycles") {
    TempDir dir;
    std::vector<Edge> edges{{0, 1}, {1, 0}, {2, 3}, {3, 2}};
    auto fn = wcc_update_function();
    auto labels = run_to_fixed_point(edges, 4, 2, *fn, kWccStableTolerance, 10, dir.path());
    CHECK(labels == std::vector<float>{0.0f, 0.0f, 2.0f, 2.0f});
}

TEST_CASE("a self-loop keeps its own label") {
    TempDir dir;
    std::vector<Edge> edges{{0, 0}};
    auto fn = wcc_update_function();
    auto labels = run_to_fixed_point(edges, 1, 1, *fn, kWccStableTolerance, 5, dir.path());
    CHECK(labels == std::vector<float>{0.0f});
}

TEST_CASE("wcc labels never increase between iterations") {
    TempDir dir;
    auto raw = add_reciprocal_edges(random_edge_list(50, 60, 91));
    auto remap = remap_ids(raw);
    const std::uint64_t n = remap.stats.vertex_count;
    IntervalStore store(testing::shard_graph(remap.edges, n, 3, dir.path()));
    auto fn = wcc_update_function();
    run_init_pass(store, *fn);

    std::vector<float> previous = read_value_file(store.manifest().value_path(), n);
    RunConfig config;
    config.max_iterations = 1;
    config.init_pass = false;
    for (int pass = 0; pass < 6; ++pass) {
        run(store, *fn, config);
        auto current = read_value_file(store.manifest().value_path(), n);
        for (std::uint64_t v = 0; v < n; ++v) CHECK(current[v] <= previous[v]);
        previous = std::move(current);
    }
}

TEST_CASE("wcc fixed point equals the union-find oracle on random undirected graphs") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        TempDir dir;
        std::uint64_t n_ext = 2 + rng.next_below(120);
        std::uint64_t m = 1 + rng.next_below(2 * n_ext);
        auto raw = add_reciprocal_edges(random_edge_list(n_ext, m, rng.next()));
        auto remap = remap_ids(raw);
        const std::uint64_t n = remap.stats.vertex_count;
        std::uint32_t p = 1 + static_cast<std::uint32_t>(rng.next_below(std::min<std::uint64_t>(4, n)));

        auto fn = wcc_update_function();
        auto labels = run_to_fixed_point(remap.edges, n, p, *fn, kWccStableTolerance,
                                         static_cast<std::uint32_t>(n + 2), dir.path());
        auto expected = wcc_oracle(remap.edges, n);
        for (std::uint64_t v = 0; v < n; ++v)
            CHECK(static_cast<vid_t>(labels[v]) == expected[v]);
    }
}
