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

#include <CLI11.hpp>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bishard/algo/pagerank.hpp"
#include "bishard/algo/wcc.hpp"
#include "bishard/bench/bench_csv.hpp"
#include "bishard/bench/psw_model.hpp"
#include "bishard/engine/engine.hpp"
#include "bishard/error.hpp"
#include "bishard/ingest/edge_list.hpp"
#include "bishard/shard/format.hpp"
#include "bishard/shard/manifest.hpp"
#include "bishard/shard/sharder.hpp"
#include "bishard/storage/interval_store.hpp"

namespace {

using namespace bishard;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitIo = 3;

constexpr const char* kEdgeFileName = "edges.bin";
constexpr const char* kIdMapFileName = "idmap.txt";
constexpr const char* kManifestFileName = "manifest.txt";

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::io_failure:
            return kExitIo;
        case ErrorKind::config_error:
            return kExitUsage;
        default:
            return kExitData;
    }
}

std::unique_ptr<UpdateFunction> make_update_function(const std::string& algo) {
    if (algo == "pagerank") return pagerank_update_function();
    if (algo == "wcc") return wcc_update_function();
    throw Error(ErrorKind::config_error, "unknown algorithm: " + algo);
}

void print_metrics(const IoMetrics& io) {
    std::printf("edge_shard_nonseq_reads=%" PRIu64 "\n", io.edge_shard_nonseq_reads);
    std::printf("scatter_nonseq_writes=%" PRIu64 "\n", io.scatter_nonseq_writes);
    std::printf("vertex_file_accesses=%" PRIu64 "\n", io.vertex_file_accesses);
    std::printf("bytes_read=%" PRIu64 "\n", io.bytes_read);
    std::printf("bytes_written=%" PRIu64 "\n", io.bytes_written);
}

int cmd_ingest(const std::string& input, const std::string& output_dir, bool undirected) {
    std::ifstream in(input);
    if (!in) throw Error(ErrorKind::io_failure, "cannot open " + input);
    ParseResult parsed = parse_edge_list(in);
    if (undirected) parsed.edges = add_reciprocal_edges(std::move(parsed.edges));
    RemapResult remapped = remap_ids(parsed.edges);

    std::filesystem::create_directories(output_dir);
    write_edge_file(std::filesystem::path(output_dir) / kEdgeFileName, remapped.edges);
    write_id_map(std::filesystem::path(output_dir) / kIdMapFileName, remapped.id_map);

    std::printf("vertices=%" PRIu64 "\n", remapped.stats.vertex_count);
    std::printf("edges=%" PRIu64 "\n", remapped.stats.edge_count);
    std::printf("max_out_degree=%u\n", remapped.stats.max_out_degree);
    std::printf("max_in_degree=%u\n", remapped.stats.max_in_degree);
    std::printf("lines_total=%" PRIu64 "\n", parsed.diagnostics.total_lines);
    std::printf("lines_comment=%" PRIu64 "\n", parsed.diagnostics.comment_lines);
    std::printf("lines_blank=%" PRIu64 "\n", parsed.diagnostics.blank_lines);
    return kExitOk;
}

std::uint64_t count_vertices(const std::vector<Edge>& edges) {
    std::uint64_t n = 0;
    for (const Edge& e : edges)
        n = std::max<std::uint64_t>({n, e.src + 1ull, e.dst + 1ull});
    return n;
}

GraphManifest shard_into(const std::filesystem::path& graph_dir,
                         const std::filesystem::path& shard_dir, const PartitionPolicy& policy) {
    std::vector<Edge> edges = read_edge_file(graph_dir / kEdgeFileName);
    std::uint64_t n = count_vertices(edges);
    if (n == 0) throw Error(ErrorKind::empty_graph, "edge file holds no edges");
    auto intervals = partition_intervals(in_degrees(edges, n), policy);
    GraphManifest manifest = build_shards(edges, n, intervals, shard_dir);
    write_manifest(manifest, shard_dir / kManifestFileName);
    return manifest;
}

int cmd_shard(const std::string& graph_dir, std::uint32_t shards, std::uint64_t budget) {
    PartitionPolicy policy = shards > 0 ? PartitionPolicy::by_count(shards)
                                        : PartitionPolicy::by_budget(budget);
    GraphManifest manifest = shard_into(graph_dir, graph_dir, policy);
    std::printf("intervals=%u\n", manifest.interval_count);
    std::printf("vertices=%" PRIu64 "\n", manifest.vertex_count);
    std::printf("edges=%" PRIu64 "\n", manifest.edge_count);
    return kExitOk;
}

void write_result_text(const std::filesystem::path& path, const std::vector<float>& values,
                       bool integer_labels) {
    std::string text;
    char line[64];
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (integer_labels)
            std::snprintf(line, sizeof(line), "%zu %u\n", v,
                          static_cast<std::uint32_t>(values[v]));
        else
            std::snprintf(line, sizeof(line), "%zu %.9g\n", v, values[v]);
        text += line;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::io_failure, "cannot open " + path.string());
    out << text;
    if (!out.flush()) throw Error(ErrorKind::io_failure, "write failed: " + path.string());
}

int cmd_run(const std::string& graph_dir, const std::string& algo, std::uint32_t iters,
            double tol, std::uint32_t workers, bool tol_given) {
    GraphManifest manifest = read_manifest(std::filesystem::path(graph_dir) / kManifestFileName);
    IntervalStore store(std::move(manifest));
    auto update_function = make_update_function(algo);

    RunConfig config;
    config.max_iterations = iters;
    config.convergence_tolerance = tol_given ? tol : (algo == "wcc" ? kWccStableTolerance : 0.0);
    config.worker_count = workers;
    config.init_pass = true;
    store.reset_metrics();
    RunReport report = run(store, *update_function, config);

    auto values = read_value_file(store.manifest().value_path(), store.manifest().vertex_count);
    write_result_text(std::filesystem::path(graph_dir) / (algo + ".txt"), values, algo == "wcc");

    std::printf("algorithm=%s\n", algo.c_str());
    std::printf("iterations=%u\n", report.iterations);
    std::printf("final_delta=%.6g\n", report.final_delta);
    std::printf("wall_seconds=%.6g\n", report.wall_seconds);
    print_metrics(report.io);
    return kExitOk;
}

int cmd_bench(const std::string& graph_dir, const std::string& shards_list,
              const std::string& algo, std::uint32_t iters, double tol,
              const std::string& output) {
    std::vector<std::uint32_t> shard_counts;
    {
        std::string token;
        std::istringstream in(shards_list);
        while (std::getline(in, token, ',')) {
            if (token.empty()) continue;
            shard_counts.push_back(static_cast<std::uint32_t>(std::stoul(token)));
        }
    }
    if (shard_counts.empty())
        throw Error(ErrorKind::config_error, "no shard counts in --shards-list");

    std::vector<BenchRow> rows;
    for (std::uint32_t p : shard_counts) {
        std::filesystem::path work =
            std::filesystem::path(graph_dir) / "bench" / ("P" + std::to_string(p));
        std::filesystem::create_directories(work);
        GraphManifest manifest =
            shard_into(graph_dir, work, PartitionPolicy::by_count(p));
        IntervalStore store(std::move(manifest));
        auto update_function = make_update_function(algo);

        // The init pass stays outside the measurement: counters cover the
        // iterations only.
        run_init_pass(store, *update_function);
        store.reset_metrics();
        RunConfig config;
        config.max_iterations = iters;
        config.convergence_tolerance = tol;
        config.init_pass = false;
        RunReport report = run(store, *update_function, config);

        BenchRow row;
        row.shard_count = p;
        row.algorithm = algo;
        row.iterations = report.iterations;
        row.wall_seconds = report.wall_seconds;
        row.edge_shard_nonseq_reads = report.io.edge_shard_nonseq_reads;
        row.scatter_nonseq_writes = report.io.scatter_nonseq_writes;
        row.bytes_read = report.io.bytes_read;
        row.bytes_written = report.io.bytes_written;
        row.psw_predicted_reads = psw_predicted_seeks(p).reads * report.iterations;
        rows.push_back(std::move(row));
    }
    emit_bench_csv(rows, output);
    std::printf("rows=%zu\n", rows.size());
    std::printf("output=%s\n", output.c_str());
    return kExitOk;
}

int cmd_stats(const std::string& graph_dir) {
    std::filesystem::path dir(graph_dir);
    std::vector<Edge> edges = read_edge_file(dir / kEdgeFileName);
    std::uint64_t n = count_vertices(edges);
    std::vector<std::uint32_t> out_deg(n, 0), in_deg(n, 0);
    for (const Edge& e : edges) {
        ++out_deg[e.src];
        ++in_deg[e.dst];
    }
    std::uint32_t max_out = 0, max_in = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        max_out = std::max(max_out, out_deg[v]);
        max_in = std::max(max_in, in_deg[v]);
    }
    std::printf("vertices=%" PRIu64 "\n", n);
    std::printf("edges=%zu\n", edges.size());
    std::printf("max_out_degree=%u\n", max_out);
    std::printf("max_in_degree=%u\n", max_in);

    if (std::filesystem::exists(dir / kManifestFileName)) {
        GraphManifest manifest = read_manifest(dir / kManifestFileName);
        std::printf("intervals=%u\n", manifest.interval_count);
        for (const IntervalRange& r : manifest.intervals) {
            std::uint64_t in_records =
                read_in_shard(manifest.in_shard(r.index)).size();
            std::printf("interval.%u=%u:%u in_edges=%" PRIu64 "\n", r.index, r.first_vertex,
                        r.last_vertex, in_records);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bishard: dual-shard out-of-core graph processing"};
    app.require_subcommand(1);

    // ingest
    auto* ingest = app.add_subcommand("ingest", "Parse a text edge list into a graph directory");
    std::string in_input, in_output;
    bool in_undirected = false;
    ingest->add_option("--input", in_input, "edge list file")->required();
    ingest->add_option("--output-dir", in_output, "graph directory to create")->required();
    ingest->add_flag("--undirected", in_undirected, "materialize reciprocal edges");

    // shard
    auto* shard = app.add_subcommand("shard", "Partition and build dual shards");
    std::string sh_dir;
    std::uint32_t sh_shards = 0;
    std::uint64_t sh_budget = 0;
    shard->add_option("--graph-dir", sh_dir, "graph directory")->required();
    auto* opt_shards = shard->add_option("--shards", sh_shards, "number of intervals");
    auto* opt_budget = shard->add_option("--budget", sh_budget, "max in-edges per interval");
    opt_shards->excludes(opt_budget);
    opt_budget->excludes(opt_shards);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run an algorithm to completion");
    std::string rn_dir, rn_algo;
    std::uint32_t rn_iters = 100, rn_workers = 0;
    double rn_tol = 0.0;
    run_cmd->add_option("--graph-dir", rn_dir, "graph directory")->required();
    run_cmd->add_option("--algo", rn_algo, "pagerank|wcc")->required();
    run_cmd->add_option("--iters", rn_iters, "max iterations");
    auto* opt_tol = run_cmd->add_option("--tol", rn_tol, "convergence tolerance (L-inf)");
    run_cmd->add_option("--workers", rn_workers, "worker threads (0 = auto)");

    // bench
    auto* bench = app.add_subcommand("bench", "Shard-count sweep with I/O counters");
    std::string be_dir, be_algo = "pagerank", be_list, be_output = "bench.csv";
    std::uint32_t be_iters = 5;
    double be_tol = 0.0;
    bench->add_option("--graph-dir", be_dir, "graph directory")->required();
    bench->add_option("--shards-list", be_list, "comma-separated shard counts")->required();
    bench->add_option("--algo", be_algo, "pagerank|wcc");
    bench->add_option("--iters", be_iters, "iterations per configuration");
    bench->add_option("--tol", be_tol, "convergence tolerance (0 = fixed iterations)");
    bench->add_option("--output", be_output, "CSV output path");

    // stats
    auto* stats = app.add_subcommand("stats", "Describe a graph directory");
    std::string st_dir;
    stats->add_option("--graph-dir", st_dir, "graph directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ingest) return cmd_ingest(in_input, in_output, in_undirected);
        if (*shard) {
            if (opt_shards->count() == 0 && opt_budget->count() == 0) {
                std::fprintf(stderr, "bishard: error: shard needs --shards or --budget\n");
                return kExitUsage;
            }
            return cmd_shard(sh_dir, sh_shards, sh_budget);
        }
        if (*run_cmd)
            return cmd_run(rn_dir, rn_algo, rn_iters, rn_tol, rn_workers, opt_tol->count() > 0);
        if (*bench) return cmd_bench(be_dir, be_list, be_algo, be_iters, be_tol, be_output);
        if (*stats) return cmd_stats(st_dir);
    } catch (const Error& e) {
        std::fprintf(stderr, "bishard: error: %s\n", e.what());
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bishard: error: %s\n", e.what());
        return kExitData;
    }
    return kExitUsage;
}
