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

#include "bishard/shard/sharder.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "bishard/error.hpp"
#include "bishard/io/binary_file.hpp"
#include "bishard/shard/format.hpp"

namespace bishard {

namespace {

void write_shard_header(std::vector<std::uint8_t>& buf, const char* magic,
                        std::uint64_t record_count) {
    buf.resize(kShardHeaderBytes);
    std::memcpy(buf.data(), magic, 8);
    store_u64(buf.data() + 8, record_count);
}

// Stable (src, dst) order; stability preserves input order among full ties.
void sort_edges(std::vector<Edge>& edges) {
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.src != b.src) return a.src < b.src;
        return a.dst < b.dst;
    });
}

std::vector<std::uint8_t> read_and_check_header(const std::filesystem::path& path,
                                                const char* magic, std::uint64_t record_bytes,
                                                std::uint64_t& record_count) {
    BinaryFile f(path, BinaryFile::Mode::read);
    std::vector<std::uint8_t> buf = f.read_all();
    if (buf.size() < kShardHeaderBytes || std::memcmp(buf.data(), magic, 8) != 0)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": bad header");
    record_count = load_u64(buf.data() + 8);
    if (buf.size() != kShardHeaderBytes + record_count * record_bytes)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": size does not match record count");
    return buf;
}

}  // namespace

std::vector<std::uint32_t> in_degrees(std::span<const Edge> edges, std::uint64_t vertex_count) {
    std::vector<std::uint32_t> degrees(vertex_count, 0);
    for (const Edge& e : edges) {
        if (e.dst >= vertex_count)
            throw Error(ErrorKind::vertex_out_of_range, std::to_string(e.dst));
        ++degrees[e.dst];
    }
    return degrees;
}

GraphManifest build_shards(std::span<const Edge> edges, std::uint64_t vertex_count,
                           const std::vector<IntervalRange>& intervals,
                           const std::filesystem::path& dir) {
    if (!intervals_valid(intervals, vertex_count))
        throw Error(ErrorKind::bad_partition, "interval ranges do not cover 0..n-1");
    const std::uint32_t interval_count = static_cast<std::uint32_t>(intervals.size());

    // Interval lookup for every vertex; also validates edge endpoints.
    std::vector<std::uint32_t> vertex_interval(vertex_count);
    for (const IntervalRange& r : intervals)
        for (std::uint64_t v = r.first_vertex; v <= r.last_vertex; ++v)
            vertex_interval[v] = r.index;

    std::vector<std::vector<Edge>> in_bucket(interval_count), out_bucket(interval_count);
    std::vector<std::uint32_t> out_degree(vertex_count, 0);
    for (const Edge& e : edges) {
        if (e.src >= vertex_count || e.dst >= vertex_count)
            throw Error(ErrorKind::vertex_out_of_range,
                        "(" + std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
        in_bucket[vertex_interval[e.dst]].push_back(e);
        out_bucket[vertex_interval[e.src]].push_back(e);
        ++out_degree[e.src];
    }

    std::filesystem::create_directories(dir / "shards");

    GraphManifest manifest;
    manifest.vertex_count = vertex_count;
    manifest.edge_count = edges.size();
    manifest.interval_count = interval_count;
    manifest.intervals = intervals;
    manifest.blocks = BlockOffsetTable(interval_count);
    manifest.degree_file = "degrees.bin";
    manifest.value_file = "values.bin";
    manifest.base_dir = dir;

    std::vector<std::uint8_t> buf;
    for (std::uint32_t q = 0; q < interval_count; ++q) {
        std::vector<Edge>& records = in_bucket[q];
        sort_edges(records);

        std::string rel = "shards/in." + std::to_string(q) + ".bin";
        manifest.in_shard_paths.push_back(rel);
        write_shard_header(buf, kInShardMagic, records.size());
        buf.reserve(kShardHeaderBytes + records.size() * kInRecordBytes);
        for (const Edge& e : records) {
            std::uint8_t rec[kInRecordBytes];
            store_u32(rec, e.src);
            store_u32(rec + 4, e.dst);
            store_f32(rec + 8, 0.0f);
            buf.insert(buf.end(), rec, rec + kInRecordBytes);
        }
        write_file(dir / rel, buf);

        // Sources arrive sorted, so the records of each source interval form
        // one contiguous run; empty blocks sit at the running offset.
        std::size_t i = 0;
        std::uint64_t offset = kShardHeaderBytes;
        for (std::uint32_t p = 0; p < interval_count; ++p) {
            std::size_t start = i;
            while (i < records.size() && intervals[p].contains(records[i].src)) ++i;
            BlockExtent& extent = manifest.blocks.at(p, q);
            extent.offset = offset;
            extent.length = (i - start) * kInRecordBytes;
            offset += extent.length;
        }
    }

    for (std::uint32_t p = 0; p < interval_count; ++p) {
        std::vector<Edge>& records = out_bucket[p];
        sort_edges(records);

        std::string rel = "shards/out." + std::to_string(p) + ".bin";
        manifest.out_shard_paths.push_back(rel);
        write_shard_header(buf, kOutShardMagic, records.size());
        buf.reserve(kShardHeaderBytes + records.size() * kOutRecordBytes);
        for (const Edge& e : records) {
            std::uint8_t rec[kOutRecordBytes];
            store_u32(rec, e.src);
            store_u32(rec + 4, e.dst);
            buf.insert(buf.end(), rec, rec + kOutRecordBytes);
        }
        write_file(dir / rel, buf);
    }

    write_degree_file(manifest.degree_path(), out_degree);
    write_value_file(manifest.value_path(), std::vector<float>(vertex_count, 0.0f));
    return manifest;
}

std::vector<InShardRecord> read_in_shard(const std::filesystem::path& path) {
    std::uint64_t count = 0;
    std::vector<std::uint8_t> buf = read_and_check_header(path, kInShardMagic, kInRecordBytes, count);
    std::vector<InShardRecord> records(count);
    const std::uint8_t* p = buf.data() + kShardHeaderBytes;
    for (std::uint64_t i = 0; i < count; ++i) {
        records[i] = InShardRecord{load_u32(p), load_u32(p + 4), load_f32(p + 8)};
        p += kInRecordBytes;
    }
    return records;
}

std::vector<Edge> read_out_shard(const std::filesystem::path& path) {
    std::uint64_t count = 0;
    std::vector<std::uint8_t> buf =
        read_and_check_header(path, kOutShardMagic, kOutRecordBytes, count);
    std::vector<Edge> records(count);
    const std::uint8_t* p = buf.data() + kShardHeaderBytes;
    for (std::uint64_t i = 0; i < count; ++i) {
        records[i] = Edge{load_u32(p), load_u32(p + 4)};
        p += kOutRecordBytes;
    }
    return records;
}

std::vector<std::uint32_t> read_degree_file(const std::filesystem::path& path,
                                            std::uint64_t vertex_count) {
    BinaryFile f(path, BinaryFile::Mode::read);
    std::vector<std::uint8_t> buf = f.read_all();
    if (buf.size() < kAuxHeaderBytes || std::memcmp(buf.data(), kDegreeFileMagic, 8) != 0)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": bad degree file header");
    if (buf.size() != kAuxHeaderBytes + vertex_count * 4)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": degree file size mismatch");
    std::vector<std::uint32_t> degrees(vertex_count);
    for (std::uint64_t v = 0; v < vertex_count; ++v)
        degrees[v] = load_u32(buf.data() + kAuxHeaderBytes + v * 4);
    return degrees;
}

std::vector<float> read_value_file(const std::filesystem::path& path,
                                   std::uint64_t vertex_count) {
    BinaryFile f(path, BinaryFile::Mode::read);
    std::vector<std::uint8_t> buf = f.read_all();
    if (buf.size() < kAuxHeaderBytes || std::memcmp(buf.data(), kValueFileMagic, 8) != 0)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": bad value file header");
    if (buf.size() != kAuxHeaderBytes + vertex_count * 4)
        throw Error(ErrorKind::corrupt_shard, path.string() + ": value file size mismatch");
    std::vector<float> values(vertex_count);
    for (std::uint64_t v = 0; v < vertex_count; ++v)
        values[v] = load_f32(buf.data() + kAuxHeaderBytes + v * 4);
    return values;
}

void write_degree_file(const std::filesystem::path& path,
                       const std::vector<std::uint32_t>& degrees) {
    std::vector<std::uint8_t> buf(kAuxHeaderBytes + degrees.size() * 4);
    std::memcpy(buf.data(), kDegreeFileMagic, 8);
    for (std::size_t v = 0; v < degrees.size(); ++v)
        store_u32(buf.data() + kAuxHeaderBytes + v * 4, degrees[v]);
    write_file(path, buf);
}

void write_value_file(const std::filesystem::path& path, const std::vector<float>& values) {
    std::vector<std::uint8_t> buf(kAuxHeaderBytes + values.size() * 4);
    std::memcpy(buf.data(), kValueFileMagic, 8);
    for (std::size_t v = 0; v < values.size(); ++v)
        store_f32(buf.data() + kAuxHeaderBytes + v * 4, values[v]);
    write_file(path, buf);
}

}  // namespace bishard
