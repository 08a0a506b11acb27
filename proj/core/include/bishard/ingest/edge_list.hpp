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

#ifndef BISHARD_INGEST_EDGE_LIST_HPP
#define BISHARD_INGEST_EDGE_LIST_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <unordered_map>
#include <vector>

#include "bishard/types.hpp"

namespace bishard {

/// An edge as it appears in the input file, before id remapping.
struct RawEdge {
    std::uint64_t src;
    std::uint64_t dst;

    friend auto operator<=>(const RawEdge&, const RawEdge&) = default;
};

struct ParseOptions {
    bool allow_duplicates = true;
    char comment_prefix = '#';
};

struct ParseDiagnostics {
    std::uint64_t total_lines = 0;
    std::uint64_t data_lines = 0;
    std::uint64_t comment_lines = 0;
    std::uint64_t blank_lines = 0;
    std::uint64_t duplicates_dropped = 0;
};

struct ParseResult {
    std::vector<RawEdge> edges;
    ParseDiagnostics diagnostics;
};

/// Parses a whitespace-separated "src dst" edge list. Lines starting with the
/// comment prefix and blank lines are skipped. A data line that does not
/// consist of exactly two non-negative integers aborts the parse with
/// Error(malformed_line) naming the 1-based line number.
ParseResult parse_edge_list(std::istream& in, const ParseOptions& options = {});

/// Bijective map between external file ids and dense ids 0..n-1.
struct IdMap {
    std::unordered_map<std::uint64_t, vid_t> to_dense;
    std::vector<std::uint64_t> to_external;  // indexed by dense id
};

struct RemapResult {
    std::vector<Edge> edges;  // same order as the input sequence
    IdMap id_map;
    GraphStats stats;
};

/// Assigns dense ids in order of first appearance (src endpoint first).
/// Throws Error(empty_graph) on an empty input.
RemapResult remap_ids(const std::vector<RawEdge>& raw_edges);

/// Appends the reverse of every non-self-loop edge, making weak reachability
/// visible through both in- and out-edge lists. Input order is preserved;
/// reversed edges follow the original sequence.
std::vector<RawEdge> add_reciprocal_edges(std::vector<RawEdge> edges);

// Canonical binary edge stream: magic "BPEDGE01", u64 edge count, then
// (u32 src, u32 dst) records, all little-endian.
void write_edge_file(const std::filesystem::path& path, const std::vector<Edge>& edges);
std::vector<Edge> read_edge_file(const std::filesystem::path& path);

/// Text id map, one "dense external" pair per line.
void write_id_map(const std::filesystem::path& path, const IdMap& map);

}  // namespace bishard

#endif  // BISHARD_INGEST_EDGE_LIST_HPP
