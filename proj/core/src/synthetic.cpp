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

#include "bishard/gen/synthetic.hpp"

#include <string>

#include "bishard/error.hpp"
#include "bishard/io/binary_file.hpp"

namespace bishard {

std::vector<RawEdge> random_edge_list(std::uint64_t vertex_count, std::uint64_t edge_count,
                                      std::uint64_t seed) {
    if (vertex_count == 0) throw Error(ErrorKind::empty_graph, "vertex_count must be >= 1");
    SplitMix64 rng(seed);
    std::vector<RawEdge> edges;
    edges.reserve(edge_count);
    for (std::uint64_t i = 0; i < edge_count; ++i)
        edges.push_back(RawEdge{rng.next_below(vertex_count), rng.next_below(vertex_count)});
    return edges;
}

std::vector<RawEdge> all_pairs_edge_list(std::uint32_t k) {
    std::vector<RawEdge> edges;
    edges.reserve(static_cast<std::size_t>(k) * k);
    for (std::uint32_t u = 0; u < k; ++u)
        for (std::uint32_t v = 0; v < k; ++v) edges.push_back(RawEdge{u, v});
    return edges;
}

std::vector<RawEdge> vote_network_edge_list(std::uint64_t vertex_count, std::uint64_t edge_count,
                                            std::uint64_t seed) {
    if (vertex_count < 2) throw Error(ErrorKind::empty_graph, "need at least two vertices");
    if (edge_count < vertex_count)
        throw Error(ErrorKind::config_error, "edge_count must cover one vote per vertex");

    SplitMix64 rng(seed);
    std::vector<std::uint32_t> votes(vertex_count);
    std::uint64_t total = 0;
    for (std::uint64_t v = 0; v < vertex_count; ++v) {
        votes[v] = 13 + static_cast<std::uint32_t>(rng.next_below(4));
        total += votes[v];
    }
    // Trim or pad deterministically until the vote total matches exactly.
    std::uint64_t v = 0;
    while (total > edge_count) {
        if (votes[v] > 1) {
            --votes[v];
            --total;
        }
        v = (v + 1) % vertex_count;
    }
    while (total < edge_count) {
        ++votes[v];
        ++total;
        v = (v + 1) % vertex_count;
    }

    std::vector<RawEdge> edges;
    edges.reserve(edge_count);
    for (std::uint64_t u = 0; u < vertex_count; ++u) {
        for (std::uint32_t i = 0; i < votes[u]; ++i) {
            std::uint64_t target = rng.next_below(vertex_count - 1);
            if (target >= u) ++target;  // no self-votes
            edges.push_back(RawEdge{u, target});
        }
    }
    return edges;
}

void write_edge_list_text(const std::filesystem::path& path,
                          const std::vector<RawEdge>& edges) {
    std::string text = "# Directed edge list: FromNodeId\tToNodeId\n";
    for (const RawEdge& e : edges) {
        text += std::to_string(e.src);
        text += '\t';
        text += std::to_string(e.dst);
        text += '\n';
    }
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace bishard
