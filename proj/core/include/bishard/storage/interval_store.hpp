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

#ifndef BISHARD_STORAGE_INTERVAL_STORE_HPP
#define BISHARD_STORAGE_INTERVAL_STORE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bishard/io/binary_file.hpp"
#include "bishard/shard/manifest.hpp"
#include "bishard/storage/metrics.hpp"

namespace bishard {

/// One in-edge as seen by its destination vertex: source id plus the current
/// on-disk value. Read-only during an update pass.
struct InEdge {
    vid_t src;
    float value;
};

/// In-memory subgraph for one interval. Every vertex of the interval owns a
/// private copy of its in-edges (readable) and out-edges (write-only slots),
/// so updates over distinct vertices never share mutable state.
class IntervalSubgraph {
  public:
    std::uint32_t interval_index() const { return interval_.index; }
    const IntervalRange& range() const { return interval_; }
    std::uint64_t vertex_count() const { return interval_.size(); }

    float vertex_value(vid_t v) const { return vertex_values_[local(v)]; }
    void set_vertex_value(vid_t v, float value) { vertex_values_[local(v)] = value; }
    std::span<const float> vertex_values() const { return vertex_values_; }

    std::span<const InEdge> in_edges(vid_t v) const {
        std::uint64_t i = local(v);
        return std::span<const InEdge>(in_edges_.data() + in_offsets_[i],
                                       in_offsets_[i + 1] - in_offsets_[i]);
    }

    /// Out-edge count equals the vertex's global out-degree: out-shard(p)
    /// carries every out-edge of the interval's vertices.
    std::uint32_t out_degree(vid_t v) const {
        std::uint64_t i = local(v);
        return static_cast<std::uint32_t>(out_offsets_[i + 1] - out_offsets_[i]);
    }
    vid_t out_target(vid_t v, std::uint32_t i) const {
        return out_dst_[out_offsets_[local(v)] + i];
    }
    void write_out_edge(vid_t v, std::uint32_t i, float value) {
        std::uint64_t slot = out_offsets_[local(v)] + i;
        out_values_[slot] = value;
        out_written_[slot] = 1;
    }

  private:
    friend class IntervalStore;

    std::uint64_t local(vid_t v) const { return v - interval_.first_vertex; }

    IntervalRange interval_{};
    std::vector<float> vertex_values_;

    // In-edges grouped by destination vertex, source-ascending within a group.
    std::vector<std::uint64_t> in_offsets_;  // vertex_count + 1
    std::vector<InEdge> in_edges_;

    // Out-edges in out-shard record order, which groups them by source vertex.
    std::vector<std::uint64_t> out_offsets_;  // vertex_count + 1
    std::vector<vid_t> out_dst_;
    std::vector<float> out_values_;
    std::vector<std::uint8_t> out_written_;
};

/// Disk access layer for a sharded graph. Loading an interval costs exactly
/// two non-sequential edge-shard reads (one full scan of in-shard(p), one of
/// out-shard(p)) plus one contiguous vertex-value slice read, independent of
/// graph size and shard count. Write-back scatters updated out-edge values to
/// the in-shards as one contiguous block write per non-empty target block.
///
/// One interval should be in flight at a time; counter updates are atomic with
/// respect to concurrent snapshot_metrics().
class IntervalStore {
  public:
    explicit IntervalStore(GraphManifest manifest);

    const GraphManifest& manifest() const { return manifest_; }
    std::uint32_t interval_count() const { return manifest_.interval_count; }

    /// Global out-degree of any vertex (the degree file is cached at
    /// construction; its one-time read is accounted in bytes_read only).
    std::uint32_t out_degree_of(vid_t v) const { return out_degrees_[v]; }

    IntervalSubgraph load_interval(std::uint32_t p);

    /// Scatters the subgraph's out-edge values to the in-shards at the block
    /// offsets recorded in the manifest and writes the vertex-value slice
    /// back. Slots never written since load keep their current on-disk value;
    /// a block containing such slots is re-filled from disk before the write
    /// (one seek, attributed to the scatter write).
    void write_back(std::uint32_t p, const IntervalSubgraph& subgraph);

    IoMetrics snapshot_metrics() const { return counters_.snapshot(); }
    void reset_metrics() { counters_.reset(); }

  private:
    std::vector<std::uint8_t> read_shard_counted(const std::filesystem::path& path,
                                                 const char* magic, std::uint64_t record_bytes,
                                                 std::uint64_t& record_count);

    GraphManifest manifest_;
    std::vector<std::uint32_t> out_degrees_;
    std::unique_ptr<BinaryFile> value_file_;
    MetricsCounters counters_;
};

}  // namespace bishard

#endif  // BISHARD_STORAGE_INTERVAL_STORE_HPP
