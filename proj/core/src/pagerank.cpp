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

#include "bishard/algo/pagerank.hpp"

#include <algorithm>
#include <cmath>

#include "bishard/error.hpp"

namespace bishard {

namespace {

class PageRankUpdate final : public UpdateFunction {
  public:
    explicit PageRankUpdate(PageRankParams params) : params_(params) {
        if (!(params.damping > 0.0 && params.damping < 1.0))
            throw Error(ErrorKind::config_error, "damping must be in (0,1)");
    }

    float init_vertex(vid_t, std::uint32_t) const override { return 1.0f; }

    float init_out_edge(vid_t, vid_t, std::uint32_t src_out_degree) const override {
        return src_out_degree ? static_cast<float>(1.0 / src_out_degree) : 0.0f;
    }

    void update(VertexContext& ctx) const override {
        double sum = 0.0;
        for (const InEdge& e : ctx.in_edges()) sum += e.value;
        float value = static_cast<float>(params_.base() + params_.damping * sum);
        ctx.set_value(value);
        std::uint32_t degree = ctx.out_degree();
        if (degree == 0) return;  // dangling vertex: rank mass is dropped
        float share = static_cast<float>(static_cast<double>(value) / degree);
        for (std::uint32_t i = 0; i < degree; ++i) ctx.write_out_edge(i, share);
    }

  private:
    PageRankParams params_;
};

}  // namespace

std::unique_ptr<UpdateFunction> pagerank_update_function(PageRankParams params) {
    return std::make_unique<PageRankUpdate>(params);
}

std::vector<double> pagerank_oracle(std::span<const Edge> edges, std::uint64_t vertex_count,
                                    PageRankParams params, double tolerance,
                                    std::uint32_t max_iterations) {
    if (!(params.damping > 0.0 && params.damping < 1.0))
        throw Error(ErrorKind::config_error, "damping must be in (0,1)");

    std::vector<std::uint32_t> out_degree(vertex_count, 0);
    for (const Edge& e : edges) ++out_degree[e.src];

    // Per-destination in-lists sorted by source ascending, matching the
    // engine's in-shard summation order.
    std::vector<Edge> sorted(edges.begin(), edges.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
    std::vector<std::uint64_t> in_offsets(vertex_count + 1, 0);
    for (const Edge& e : sorted) ++in_offsets[e.dst + 1];
    for (std::uint64_t v = 0; v < vertex_count; ++v) in_offsets[v + 1] += in_offsets[v];
    std::vector<vid_t> in_src(sorted.size());
    {
        std::vector<std::uint64_t> cursor(in_offsets.begin(), in_offsets.end() - 1);
        for (const Edge& e : sorted) in_src[cursor[e.dst]++] = e.src;
    }

    std::vector<double> values(vertex_count, 1.0), next(vertex_count);
    for (std::uint32_t iteration = 1; iteration <= max_iterations; ++iteration) {
        double delta = 0.0;
        for (std::uint64_t v = 0; v < vertex_count; ++v) {
            double sum = 0.0;
            for (std::uint64_t i = in_offsets[v]; i < in_offsets[v + 1]; ++i) {
                vid_t u = in_src[i];
                sum += values[u] / out_degree[u];
            }
            next[v] = params.base() + params.damping * sum;
            delta = std::max(delta, std::abs(next[v] - values[v]));
        }
        values.swap(next);
        if (delta < tolerance) return values;
    }
    throw Error(ErrorKind::no_convergence,
                "no fixed point after " + std::to_string(max_iterations) + " iterations");
}

}  // namespace bishard
