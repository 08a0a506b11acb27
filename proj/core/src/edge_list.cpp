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

#include "bishard/ingest/edge_list.hpp"

#include <charconv>
#include <cstring>
#include <string>
#include <unordered_set>

#include "bishard/error.hpp"
#include "bishard/io/binary_file.hpp"

namespace bishard {

namespace {

constexpr char kEdgeFileMagic[8] = {'B', 'P', 'E', 'D', 'G', 'E', '0', '1'};

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Parses exactly two non-negative integers from `line`; returns false on any
// deviation (missing token, junk character, trailing token).
bool parse_two_ints(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
    const char* p = line.data();
    const char* end = p + line.size();
    auto skip_ws = [&] {
        while (p < end && is_space(*p)) ++p;
    };
    skip_ws();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc() || r1.ptr == p) return false;
    p = r1.ptr;
    if (p == end || !is_space(*p)) return false;
    skip_ws();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc() || r2.ptr == p) return false;
    p = r2.ptr;
    skip_ws();
    return p == end;
}

struct RawEdgeHash {
    std::size_t operator()(const RawEdge& e) const {
        std::uint64_t h = e.src * 0x9e3779b97f4a7c15ULL ^ (e.dst + 0x517cc1b727220a95ULL);
        h ^= h >> 32;
        return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ULL);
    }
};

}  // namespace

ParseResult parse_edge_list(std::istream& in, const ParseOptions& options) {
    ParseResult result;
    std::unordered_set<RawEdge, RawEdgeHash> seen;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++result.diagnostics.total_lines;
        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first == line.size()) {
            ++result.diagnostics.blank_lines;
            continue;
        }
        if (line[first] == options.comment_prefix) {
            ++result.diagnostics.comment_lines;
            continue;
        }
        std::uint64_t src = 0, dst = 0;
        if (!parse_two_ints(line, src, dst)) {
            throw Error(ErrorKind::malformed_line,
                        "line " + std::to_string(line_no) + ": expected two integer tokens");
        }
        ++result.diagnostics.data_lines;
        RawEdge e{src, dst};
        if (!options.allow_duplicates) {
            if (!seen.insert(e).second) {
                ++result.diagnostics.duplicates_dropped;
                continue;
            }
        }
        result.edges.push_back(e);
    }
    return result;
}

RemapResult remap_ids(const std::vector<RawEdge>& raw_edges) {
    if (raw_edges.empty()) throw Error(ErrorKind::empty_graph, "no edges to remap");

    RemapResult result;
    result.edges.reserve(raw_edges.size());
    auto dense_of = [&](std::uint64_t external) -> vid_t {
        auto [it, inserted] =
            result.id_map.to_dense.try_emplace(external,
                                               static_cast<vid_t>(result.id_map.to_external.size()));
        if (inserted) result.id_map.to_external.push_back(external);
        return it->second;
    };
    for (const RawEdge& e : raw_edges) {
        vid_t s = dense_of(e.src);
        vid_t d = dense_of(e.dst);
        result.edges.push_back(Edge{s, d});
    }

    const std::uint64_t n = result.id_map.to_external.size();
    std::vector<std::uint32_t> out_deg(n, 0), in_deg(n, 0);
    for (const Edge& e : result.edges) {
        ++out_deg[e.src];
        ++in_deg[e.dst];
    }
    result.stats.vertex_count = n;
    result.stats.edge_count = result.edges.size();
    for (std::uint64_t v = 0; v < n; ++v) {
        result.stats.max_out_degree = std::max(result.stats.max_out_degree, out_deg[v]);
        result.stats.max_in_degree = std::max(result.stats.max_in_degree, in_deg[v]);
    }
    return result;
}

std::vector<RawEdge> add_reciprocal_edges(std::vector<RawEdge> edges) {
    const std::size_t original = edges.size();
    edges.reserve(original * 2);
    for (std::size_t i = 0; i < original; ++i) {
        if (edges[i].src != edges[i].dst) edges.push_back(RawEdge{edges[i].dst, edges[i].src});
    }
    return edges;
}

void write_edge_file(const std::filesystem::path& path, const std::vector<Edge>& edges) {
    std::vector<std::uint8_t> buf(16 + edges.size() * 8);
    std::memcpy(buf.data(), kEdgeFileMagic, 8);
    store_u64(buf.data() + 8, edges.size());
    std::uint8_t* p = buf.data() + 16;
    for (const Edge& e : edges) {
        store_u32(p, e.src);
        store_u32(p + 4, e.dst);
        p += 8;
    }
    write_file(path, buf);
}

std::vector<Edge> read_edge_file(const std::filesystem::path& path) {
    BinaryFile f(path, BinaryFile::Mode::read);
    std::vector<std::uint8_t> buf = f.read_all();
    if (buf.size() < 16 || std::memcmp(buf.data(), kEdgeFileMagic, 8) != 0)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": bad edge file header");
    std::uint64_t count = load_u64(buf.data() + 8);
    if (buf.size() != 16 + count * 8)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": edge file size mismatch");
    std::vector<Edge> edges(count);
    const std::uint8_t* p = buf.data() + 16;
    for (std::uint64_t i = 0; i < count; ++i) {
        edges[i] = Edge{load_u32(p), load_u32(p + 4)};
        p += 8;
    }
    return edges;
}

void write_id_map(const std::filesystem::path& path, const IdMap& map) {
    std::string text;
    for (std::size_t dense = 0; dense < map.to_external.size(); ++dense) {
        text += std::to_string(dense);
        text += ' ';
        text += std::to_string(map.to_external[dense]);
        text += '\n';
    }
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace bishard
