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

#include "bishard/algo/wcc.hpp"

#include <algorithm>
#include <numeric>

namespace bishard {

namespace {

// Labels are vertex ids carried in the f32 value channel; they stay exact for
// ids below 2^24.
class WccUpdate final : public UpdateFunction {
  public:
    float init_vertex(vid_t v, std::uint32_t) const override { return static_cast<float>(v); }

    float init_out_edge(vid_t src, vid_t, std::uint32_t) const override {
        return static_cast<float>(src);
    }

    void update(VertexContext& ctx) const override {
        float label = ctx.value();
        for (const InEdge& e : ctx.in_edges()) label = std::min(label, e.value);
        ctx.set_value(label);
        for (std::uint32_t i = 0, d = ctx.out_degree(); i < d; ++i) ctx.write_out_edge(i, label);
    }
};

struct UnionFind {
    std::vector<vid_t> parent;

    explicit UnionFind(std::uint64_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    vid_t find(vid_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    void unite(vid_t a, vid_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::unique_ptr<UpdateFunction> wcc_update_function() {
    return std::make_unique<WccUpdate>();
}

std::vector<vid_t> wcc_oracle(std::span<const Edge> edges, std::uint64_t vertex_count) {
    UnionFind uf(vertex_count);
    for (const Edge& e : edges) uf.unite(e.src, e.dst);

    std::vector<vid_t> min_of_root(vertex_count);
    std::iota(min_of_root.begin(), min_of_root.end(), 0);
    for (std::uint64_t v = 0; v < vertex_count; ++v) {
        vid_t root = uf.find(static_cast<vid_t>(v));
        min_of_root[root] = std::min(min_of_root[root], static_cast<vid_t>(v));
    }
    std::vector<vid_t> labels(vertex_count);
    for (std::uint64_t v = 0; v < vertex_count; ++v)
        labels[v] = min_of_root[uf.find(static_cast<vid_t>(v))];
    return labels;
}

}  // namespace bishard
