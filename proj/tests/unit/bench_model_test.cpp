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

#include "bishard/algo/pagerank.hpp"
#include "bishard/bench/bench_csv.hpp"
#include "bishard/bench/psw_model.hpp"
#include "bishard/engine/engine.hpp"
#include "bishard/error.hpp"
#include "bishard/gen/synthetic.hpp"
#include "test_util.hpp"

using namespace bishard;
using bishard::testing::TempDir;

TEST_CASE("psw model: single interval predicts one read and one write") {
    CHECK(psw_predicted_seeks(1) == SeekCounts{1, 1});
}

TEST_CASE("psw model: P=4 predicts 16 seeks each way, twice the dual-shard reads") {
    CHECK(psw_predicted_seeks(4) == SeekCounts{16, 16});

    // Measured side: one pass at P=4 costs 8 edge-shard reads.
    TempDir dir;
    auto dense = testing::to_dense(all_pairs_edge_list(8));
    IntervalStore store(testing::shard_graph(dense, 8, 4, dir.path()));
    auto pr = pagerank_update_function();
    run_init_pass(store, *pr);
    store.reset_metrics();
    RunConfig config;
    config.max_iterations = 1;
    config.init_pass = false;
    run(store, *pr, config);
    CHECK(store.snapshot_metrics().edge_shard_nonseq_reads == 8);
    CHECK(8 < psw_predicted_seeks(4).reads);
}

TEST_CASE("psw model: the total seek ratio tends to one half from above") {
    // (2P + P^2) / (2 P^2) = 1/2 + 1/P.
    PswCostModel p16{16};
    CHECK(p16.total_seek_ratio_upper_bound() == doctest::Approx(0.5625));
    CHECK((2.0 * 16 + 256.0) / 512.0 <= 0.6);

    double previous = 1.0;
    for (std::uint32_t p : {4u, 8u, 16u, 32u, 64u}) {
        PswCostModel model{p};
        CHECK(model.bp_reads_per_pass() == 2ull * p);
        if (p >= 3) CHECK(model.bp_reads_per_pass() < model.psw_reads_per_pass());
        double ratio = model.total_seek_ratio_upper_bound();
        CHECK(ratio < previous);
        CHECK(ratio > 0.5);
        previous = ratio;
    }
}

TEST_CASE("bench csv: one row yields a header plus one line") {
    TempDir dir;
    BenchRow row;
    row.shard_count = 2;
    row.algorithm = "pagerank";
    row.iterations = 3;
    row.wall_seconds = 0.125;
    row.edge_shard_nonseq_reads = 12;
    row.psw_predicted_reads = 12;
    auto path = dir / "bench.csv";
    emit_bench_csv(std::vector<BenchRow>{row}, path);

    std::ifstream in(path);
    std::string header, line, extra;
    REQUIRE(std::getline(in, header));
    CHECK(header ==
          "P,algorithm,iterations,wall_seconds,edge_shard_nonseq_reads,scatter_nonseq_writes,"
          "bytes_read,bytes_written,psw_predicted_reads");
    REQUIRE(std::getline(in, line));
    CHECK(line == "2,pagerank,3,0.125,12,0,0,0,12");
    CHECK(!std::getline(in, extra));
}

TEST_CASE("bench csv: empty input is rejected") {
    TempDir dir;
    try {
        emit_bench_csv(std::vector<BenchRow>{}, dir / "bench.csv");
        FAIL_CHECK("expected config_error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::config_error);
    }
}

TEST_CASE("bench csv: rows are byte-identical across runs once timing is masked") {
    TempDir dir;
    auto make_rows = [](double seconds) {
        std::vector<BenchRow> rows;
        for (std::uint32_t p : {2u, 4u, 8u}) {
            BenchRow row;
            row.shard_count = p;
            row.algorithm = "pagerank";
            row.iterations = 2;
            row.wall_seconds = seconds;
            row.edge_shard_nonseq_reads = 4ull * p;
            row.scatter_nonseq_writes = p;
            row.psw_predicted_reads = 2ull * p * p;
            rows.push_back(row);
        }
        return rows;
    };
    emit_bench_csv(make_rows(0.111), dir / "a.csv");
    emit_bench_csv(make_rows(0.999), dir / "b.csv");

    auto mask_wall = [](const std::filesystem::path& path) {
        std::ifstream in(path);
        std::string text, line;
        while (std::getline(in, line)) {
            // wall_seconds is the fourth column.
            std::size_t start = 0;
            for (int commas = 0; commas < 3; ++commas) start = line.find(',', start) + 1;
            std::size_t end = line.find(',', start);
            text += line.substr(0, start) + "X" + line.substr(end) + "\n";
        }
        return text;
    };
    CHECK(mask_wall(dir / "a.csv") == mask_wall(dir / "b.csv"));
}
