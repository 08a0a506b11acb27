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

#include "bishard/engine/engine.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include "bishard/error.hpp"

namespace bishard {

void run_init_pass(IntervalStore& store, const UpdateFunction& update_function) {
    for (std::uint32_t p = 0; p < store.interval_count(); ++p) {
        IntervalSubgraph sub = store.load_interval(p);
        const IntervalRange range = sub.range();
        for (vid_t v = range.first_vertex;; ++v) {
            std::uint32_t degree = sub.out_degree(v);
            sub.set_vertex_value(v, update_function.init_vertex(v, degree));
            for (std::uint32_t i = 0; i < degree; ++i)
                sub.write_out_edge(v, i,
                                   update_function.init_out_edge(v, sub.out_target(v, i), degree));
            if (v == range.last_vertex) break;
        }
        store.write_back(p, sub);
    }
}

namespace {

struct WorkerFailure {
    std::mutex mutex;
    bool failed = false;
    vid_t vertex = 0;
    std::string message;

    void record(vid_t v, const std::string& msg) {
        std::lock_guard lock(mutex);
        if (!failed || v < vertex) {
            failed = true;
            vertex = v;
            message = msg;
        }
    }
};

void update_range(IntervalSubgraph& sub, const UpdateFunction& uf, vid_t first, vid_t last,
                  WorkerFailure& failure) {
    for (vid_t v = first;; ++v) {
        try {
            VertexContext ctx(sub, v);
            uf.update(ctx);
        } catch (const std::exception& e) {
            failure.record(v, e.what());
            return;
        } catch (...) {
            failure.record(v, "unknown exception");
            return;
        }
        if (v == last) break;
    }
}

}  // namespace

void run_interval(IntervalSubgraph& subgraph, const UpdateFunction& update_function,
                  std::uint32_t worker_count) {
    const std::uint64_t count = subgraph.vertex_count();
    if (count == 0) return;

    std::uint32_t workers = worker_count;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<std::uint32_t>(std::min<std::uint64_t>(workers, count));

    const IntervalRange range = subgraph.range();
    WorkerFailure failure;
    if (workers == 1) {
        update_range(subgraph, update_function, range.first_vertex, range.last_vertex, failure);
    } else {
        const std::uint64_t chunk = (count + workers - 1) / workers;
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::uint32_t w = 0; w < workers; ++w) {
            std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
            if (begin >= count) break;
            std::uint64_t end = std::min(begin + chunk, count);
            vid_t first = range.first_vertex + static_cast<vid_t>(begin);
            vid_t last = range.first_vertex + static_cast<vid_t>(end - 1);
            threads.emplace_back([&, first, last] {
                update_range(subgraph, update_function, first, last, failure);
            });
        }
        for (std::thread& t : threads) t.join();
    }

    if (failure.failed)
        throw Error(ErrorKind::update_failed,
                    "vertex " + std::to_string(failure.vertex) + ": " + failure.message);
}

RunReport run(IntervalStore& store, const UpdateFunction& update_function,
              const RunConfig& config) {
    if (config.max_iterations < 1)
        throw Error(ErrorKind::config_error, "max_iterations must be >= 1");
    if (config.convergence_tolerance < 0.0)
        throw Error(ErrorKind::config_error, "convergence_tolerance must be >= 0");

    const auto start = std::chrono::steady_clock::now();
    if (config.init_pass) run_init_pass(store, update_function);

    RunReport report;
    std::vector<float> before;
    for (std::uint32_t iteration = 1; iteration <= config.max_iterations; ++iteration) {
        double delta = 0.0;
        for (std::uint32_t p = 0; p < store.interval_count(); ++p) {
            IntervalSubgraph sub = store.load_interval(p);
            std::span<const float> values = sub.vertex_values();
            before.assign(values.begin(), values.end());
            run_interval(sub, update_function, config.worker_count);
            values = sub.vertex_values();
            for (std::size_t i = 0; i < before.size(); ++i)
                delta = std::max(delta, std::abs(static_cast<double>(values[i]) - before[i]));
            store.write_back(p, sub);
        }
        report.iterations = iteration;
        report.final_delta = delta;
        if (config.convergence_tolerance > 0.0 && delta < config.convergence_tolerance) break;
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.io = store.snapshot_metrics();
    return report;
}

}  // namespace bishard
