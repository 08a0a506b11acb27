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

#include "bishard/storage/interval_store.hpp"

#include <cstring>
#include <string>

#include "bishard/error.hpp"
#include "bishard/shard/format.hpp"

namespace bishard {

IntervalStore::IntervalStore(GraphManifest manifest) : manifest_(std::move(manifest)) {
    // Degree data is vertex-sized and stays resident; the one-time read shows
    // up in bytes_read but is not an edge-shard or vertex-file access.
    out_degrees_ = read_degree_file(manifest_.degree_path(), manifest_.vertex_count);
    counters_.add_bytes_read(kAuxHeaderBytes + manifest_.vertex_count * 4);

    value_file_ = std::make_unique<BinaryFile>(manifest_.value_path(),
                                               BinaryFile::Mode::read_write);
    if (value_file_->size() != kAuxHeaderBytes + manifest_.vertex_count * 4)
        throw Error(ErrorKind::corrupt_shard,
                    manifest_.value_path().string() + ": value file size mismatch");
}

std::vector<std::uint8_t> IntervalStore::read_shard_counted(const std::filesystem::path& path,
                                                            const char* magic,
                                                            std::uint64_t record_bytes,
                                                            std::uint64_t& record_count) {
    // Open + full scan = one non-sequential read, headers included.
    BinaryFile file(path, BinaryFile::Mode::read);
    std::vector<std::uint8_t> buf = file.read_all();
    counters_.add_edge_shard_read(buf.size());
    if (buf.size() < kShardHeaderBytes || std::memcmp(buf.data(), magic, 8) != 0)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": bad header");
    record_count = load_u64(buf.data() + 8);
    if (buf.size() != kShardHeaderBytes + record_count * record_bytes)
        throw Error(ErrorKind::corrupt_shard,
                    path.string() + ": size does not match record count");
    return buf;
}

IntervalSubgraph IntervalStore::load_interval(std::uint32_t p) {
    if (p >= manifest_.interval_count)
        throw Error(ErrorKind::config_error, "interval index out of range");
    const IntervalRange& interval = manifest_.intervals[p];
    const std::uint64_t count = interval.size();

    IntervalSubgraph sub;
    sub.interval_ = interval;

    // In-shard(p): full sequential scan, then group records by destination.
    std::uint64_t in_count = 0;
    std::vector<std::uint8_t> in_buf =
        read_shard_counted(manifest_.in_shard(p), kInShardMagic, kInRecordBytes, in_count);

    sub.in_offsets_.assign(count + 1, 0);
    {
        const std::uint8_t* rec = in_buf.data() + kShardHeaderBytes;
        vid_t prev_src = 0;
        for (std::uint64_t i = 0; i < in_count; ++i, rec += kInRecordBytes) {
            vid_t src = load_u32(rec);
            vid_t dst = load_u32(rec + 4);
            if (!interval.contains(dst))
                throw Error(ErrorKind::corrupt_shard,
                            manifest_.in_shard(p).string() + ": destination " +
                                std::to_string(dst) + " outside interval");
            if (src < prev_src)
                throw Error(ErrorKind::corrupt_shard,
                            manifest_.in_shard(p).string() + ": sources not sorted");
            prev_src = src;
            ++sub.in_offsets_[dst - interval.first_vertex + 1];
        }
        for (std::uint64_t v = 0; v < count; ++v) sub.in_offsets_[v + 1] += sub.in_offsets_[v];

        sub.in_edges_.resize(in_count);
        std::vector<std::uint64_t> cursor(sub.in_offsets_.begin(), sub.in_offsets_.end() - 1);
        rec = in_buf.data() + kShardHeaderBytes;
        for (std::uint64_t i = 0; i < in_count; ++i, rec += kInRecordBytes) {
            vid_t src = load_u32(rec);
            vid_t dst = load_u32(rec + 4);
            float value = load_f32(rec + 8);
            sub.in_edges_[cursor[dst - interval.first_vertex]++] = InEdge{src, value};
        }
    }

    // Out-shard(p): full sequential scan; records are already grouped by
    // source, so the flat arrays keep record order.
    std::uint64_t out_count = 0;
    std::vector<std::uint8_t> out_buf =
        read_shard_counted(manifest_.out_shard(p), kOutShardMagic, kOutRecordBytes, out_count);

    sub.out_offsets_.assign(count + 1, 0);
    sub.out_dst_.resize(out_count);
    sub.out_values_.assign(out_count, 0.0f);
    sub.out_written_.assign(out_count, 0);
    {
        const std::uint8_t* rec = out_buf.data() + kShardHeaderBytes;
        vid_t prev_src = 0;
        for (std::uint64_t i = 0; i < out_count; ++i, rec += kOutRecordBytes) {
            vid_t src = load_u32(rec);
            vid_t dst = load_u32(rec + 4);
            if (!interval.contains(src))
                throw Error(ErrorKind::corrupt_shard,
                            manifest_.out_shard(p).string() + ": source " + std::to_string(src) +
                                " outside interval");
            if (src < prev_src)
                throw Error(ErrorKind::corrupt_shard,
                            manifest_.out_shard(p).string() + ": sources not sorted");
            prev_src = src;
            sub.out_dst_[i] = dst;
            ++sub.out_offsets_[src - interval.first_vertex + 1];
        }
        for (std::uint64_t v = 0; v < count; ++v) sub.out_offsets_[v + 1] += sub.out_offsets_[v];
    }

    // Vertex values: one contiguous slice of the value file.
    {
        std::vector<std::uint8_t> slice(count * 4);
        value_file_->read_at(kAuxHeaderBytes + static_cast<std::uint64_t>(interval.first_vertex) * 4,
                             slice);
        counters_.add_vertex_access_read(slice.size());
        sub.vertex_values_.resize(count);
        for (std::uint64_t v = 0; v < count; ++v)
            sub.vertex_values_[v] = load_f32(slice.data() + v * 4);
    }

    return sub;
}

void IntervalStore::write_back(std::uint32_t p, const IntervalSubgraph& subgraph) {
    if (p >= manifest_.interval_count)
        throw Error(ErrorKind::config_error, "interval index out of range");
    const IntervalRange& interval = manifest_.intervals[p];
    if (subgraph.interval_ != interval)
        throw Error(ErrorKind::config_error, "subgraph does not belong to interval");
    const std::uint32_t interval_count = manifest_.interval_count;

    // Group the flat out-edge arrays per target interval. Flat order is
    // out-shard record order, which restricted to one target interval is
    // exactly the on-disk order of that in-shard block.
    struct PendingRecord {
        vid_t src;
        vid_t dst;
        float value;
        bool written;
    };
    std::vector<std::vector<PendingRecord>> per_target(interval_count);
    for (std::uint32_t q = 0; q < interval_count; ++q)
        per_target[q].reserve(manifest_.blocks.at(p, q).length / kInRecordBytes);

    const std::uint64_t vertex_count = subgraph.vertex_count();
    for (std::uint64_t i = 0; i < vertex_count; ++i) {
        vid_t src = interval.first_vertex + static_cast<vid_t>(i);
        for (std::uint64_t slot = subgraph.out_offsets_[i]; slot < subgraph.out_offsets_[i + 1];
             ++slot) {
            vid_t dst = subgraph.out_dst_[slot];
            std::uint32_t q = interval_of(manifest_.intervals, dst);
            per_target[q].push_back(PendingRecord{src, dst, subgraph.out_values_[slot],
                                                  subgraph.out_written_[slot] != 0});
        }
    }

    for (std::uint32_t q = 0; q < interval_count; ++q) {
        const std::vector<PendingRecord>& records = per_target[q];
        const BlockExtent& extent = manifest_.blocks.at(p, q);
        if (extent.length != records.size() * kInRecordBytes)
            throw Error(ErrorKind::offset_mismatch,
                        "block (" + std::to_string(p) + "," + std::to_string(q) + ") holds " +
                            std::to_string(extent.length / kInRecordBytes) +
                            " records, subgraph has " + std::to_string(records.size()));
        if (records.empty()) continue;

        bool all_written = true;
        for (const PendingRecord& r : records) all_written &= r.written;

        std::vector<std::uint8_t> block(extent.length);
        BinaryFile shard(manifest_.in_shard(q), BinaryFile::Mode::read_write);
        if (all_written) {
            std::uint8_t* out = block.data();
            for (const PendingRecord& r : records) {
                store_u32(out, r.src);
                store_u32(out + 4, r.dst);
                store_f32(out + 8, r.value);
                out += kInRecordBytes;
            }
        } else {
            // Unwritten slots keep their current on-disk value: refill the
            // block from disk and overlay the written slots. The refill rides
            // on the same seek as the block write.
            shard.read_at(extent.offset, block);
            counters_.add_bytes_read(block.size());
            std::uint8_t* out = block.data();
            for (const PendingRecord& r : records) {
                if (load_u32(out) != r.src || load_u32(out + 4) != r.dst)
                    throw Error(ErrorKind::offset_mismatch,
                                "block (" + std::to_string(p) + "," + std::to_string(q) +
                                    ") record order disagrees with subgraph");
                if (r.written) store_f32(out + 8, r.value);
                out += kInRecordBytes;
            }
        }
        shard.write_at(extent.offset, block);
        counters_.add_scatter_write(block.size());
    }

    // Vertex values: one contiguous slice write.
    {
        std::vector<std::uint8_t> slice(vertex_count * 4);
        for (std::uint64_t v = 0; v < vertex_count; ++v)
            store_f32(slice.data() + v * 4, subgraph.vertex_values_[v]);
        value_file_->write_at(
            kAuxHeaderBytes + static_cast<std::uint64_t>(interval.first_vertex) * 4, slice);
        counters_.add_vertex_access_write(slice.size());
    }
}

}  // namespace bishard
