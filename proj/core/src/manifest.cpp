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

#include "bishard/shard/manifest.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#include "bishard/error.hpp"
#include "bishard/io/binary_file.hpp"
#include "bishard/shard/format.hpp"

namespace bishard {

namespace {

[[noreturn]] void corrupt(const std::string& reason) {
    throw Error(ErrorKind::corrupt_manifest, reason);
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), value);
    if (r.ec != std::errc() || r.ptr != text.data() + text.size())
        corrupt("bad integer for " + what + ": '" + text + "'");
    return value;
}

void check_file_header(const std::filesystem::path& path, const char* magic,
                       std::uint64_t expected_size_min) {
    if (!std::filesystem::exists(path)) corrupt("missing file: " + path.string());
    BinaryFile f(path, BinaryFile::Mode::read);
    if (f.size() < expected_size_min) corrupt("file too short: " + path.string());
    std::uint8_t header[8];
    f.read_at(0, header);
    if (std::memcmp(header, magic, 8) != 0) corrupt("bad magic in " + path.string());
}

// Shard header check returning the record count.
std::uint64_t shard_record_count(const std::filesystem::path& path, const char* magic,
                                 std::uint64_t record_bytes) {
    check_file_header(path, magic, kShardHeaderBytes);
    BinaryFile f(path, BinaryFile::Mode::read);
    std::uint8_t header[16];
    f.read_at(0, header);
    std::uint64_t count = load_u64(header + 8);
    if (f.size() != kShardHeaderBytes + count * record_bytes)
        corrupt("size does not match record count: " + path.string());
    return count;
}

}  // namespace

void write_manifest(const GraphManifest& manifest, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "bishard_manifest_version=" << manifest.format_version << "\n";
    out << "vertex_count=" << manifest.vertex_count << "\n";
    out << "edge_count=" << manifest.edge_count << "\n";
    out << "interval_count=" << manifest.interval_count << "\n";
    for (const IntervalRange& r : manifest.intervals)
        out << "interval." << r.index << "=" << r.first_vertex << ":" << r.last_vertex << "\n";
    for (std::uint32_t p = 0; p < manifest.interval_count; ++p)
        out << "in_shard." << p << "=" << manifest.in_shard_paths[p] << "\n";
    for (std::uint32_t p = 0; p < manifest.interval_count; ++p)
        out << "out_shard." << p << "=" << manifest.out_shard_paths[p] << "\n";
    out << "degree_file=" << manifest.degree_file << "\n";
    out << "value_file=" << manifest.value_file << "\n";
    for (std::uint32_t q = 0; q < manifest.interval_count; ++q)
        for (std::uint32_t p = 0; p < manifest.interval_count; ++p) {
            const BlockExtent& e = manifest.blocks.at(p, q);
            out << "block " << p << " " << q << " " << e.offset << " " << e.length << "\n";
        }

    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::io_failure, "cannot open " + path.string());
    file << out.str();
    if (!file.flush()) throw Error(ErrorKind::io_failure, "write failed: " + path.string());
}

GraphManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw Error(ErrorKind::io_failure, "cannot open " + path.string());

    GraphManifest manifest;
    manifest.base_dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");

    std::string line;
    bool version_seen = false;
    std::vector<std::string> block_lines;
    while (std::getline(file, line)) {
        if (line.empty()) continue;
        if (!version_seen) {
            const std::string prefix = "bishard_manifest_version=";
            if (!line.starts_with(prefix)) corrupt("first line must carry the format version");
            std::uint64_t version = parse_u64(line.substr(prefix.size()), "version");
            if (version != kManifestVersion)
                throw Error(ErrorKind::version_mismatch,
                            "manifest version " + std::to_string(version) + ", expected " +
                                std::to_string(kManifestVersion));
            manifest.format_version = static_cast<std::uint32_t>(version);
            version_seen = true;
            continue;
        }
        if (line.starts_with("block ")) {
            block_lines.push_back(line);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) corrupt("not a key=value line: '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "vertex_count") {
            manifest.vertex_count = parse_u64(value, key);
        } else if (key == "edge_count") {
            manifest.edge_count = parse_u64(value, key);
        } else if (key == "interval_count") {
            manifest.interval_count = static_cast<std::uint32_t>(parse_u64(value, key));
            manifest.intervals.resize(manifest.interval_count);
            manifest.in_shard_paths.resize(manifest.interval_count);
            manifest.out_shard_paths.resize(manifest.interval_count);
            manifest.blocks = BlockOffsetTable(manifest.interval_count);
        } else if (key.starts_with("interval.")) {
            std::uint64_t p = parse_u64(key.substr(9), "interval index");
            if (p >= manifest.intervals.size()) corrupt("interval index out of range: " + key);
            auto colon = value.find(':');
            if (colon == std::string::npos) corrupt("bad interval range: '" + value + "'");
            manifest.intervals[p] = IntervalRange{
                static_cast<std::uint32_t>(p),
                static_cast<vid_t>(parse_u64(value.substr(0, colon), "interval first")),
                static_cast<vid_t>(parse_u64(value.substr(colon + 1), "interval last"))};
        } else if (key.starts_with("in_shard.")) {
            std::uint64_t p = parse_u64(key.substr(9), "in_shard index");
            if (p >= manifest.in_shard_paths.size()) corrupt("in_shard index out of range: " + key);
            manifest.in_shard_paths[p] = value;
        } else if (key.starts_with("out_shard.")) {
            std::uint64_t p = parse_u64(key.substr(10), "out_shard index");
            if (p >= manifest.out_shard_paths.size())
                corrupt("out_shard index out of range: " + key);
            manifest.out_shard_paths[p] = value;
        } else if (key == "degree_file") {
            manifest.degree_file = value;
        } else if (key == "value_file") {
            manifest.value_file = value;
        } else {
            corrupt("unknown key: '" + key + "'");
        }
    }
    if (!version_seen) corrupt("empty manifest");
    if (manifest.interval_count == 0) corrupt("interval_count missing or zero");

    for (const std::string& bl : block_lines) {
        std::istringstream in(bl);
        std::string word;
        std::uint64_t p, q, offset, length;
        if (!(in >> word >> p >> q >> offset >> length)) corrupt("bad block line: '" + bl + "'");
        if (p >= manifest.interval_count || q >= manifest.interval_count)
            corrupt("block interval out of range: '" + bl + "'");
        manifest.blocks.at(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)) =
            BlockExtent{offset, length};
    }

    // Structural validation.
    if (!intervals_valid(manifest.intervals, manifest.vertex_count))
        corrupt("interval ranges do not cover 0..n-1");
    for (std::uint32_t p = 0; p < manifest.interval_count; ++p) {
        if (manifest.in_shard_paths[p].empty() || manifest.out_shard_paths[p].empty())
            corrupt("missing shard path for interval " + std::to_string(p));
    }
    if (manifest.degree_file.empty() || manifest.value_file.empty())
        corrupt("missing degree or value file path");

    // Referenced files and their headers.
    std::uint64_t total_in = 0, total_out = 0;
    for (std::uint32_t q = 0; q < manifest.interval_count; ++q) {
        std::uint64_t in_count =
            shard_record_count(manifest.in_shard(q), kInShardMagic, kInRecordBytes);
        std::uint64_t out_count =
            shard_record_count(manifest.out_shard(q), kOutShardMagic, kOutRecordBytes);
        total_in += in_count;
        total_out += out_count;

        // Block tiling of in-shard(q)'s record region.
        std::uint64_t offset = kShardHeaderBytes;
        for (std::uint32_t p = 0; p < manifest.interval_count; ++p) {
            const BlockExtent& e = manifest.blocks.at(p, q);
            if (e.offset != offset)
                corrupt("block (" + std::to_string(p) + "," + std::to_string(q) +
                        ") offset breaks tiling");
            if (e.length % kInRecordBytes != 0)
                corrupt("block (" + std::to_string(p) + "," + std::to_string(q) +
                        ") length not a record multiple");
            offset += e.length;
        }
        if (offset != kShardHeaderBytes + in_count * kInRecordBytes)
            corrupt("blocks do not tile in-shard " + std::to_string(q));
    }
    if (total_in != manifest.edge_count || total_out != manifest.edge_count)
        corrupt("shard record totals disagree with edge_count");

    check_file_header(manifest.degree_path(), kDegreeFileMagic,
                      kAuxHeaderBytes + manifest.vertex_count * 4);
    if (std::filesystem::file_size(manifest.degree_path()) !=
        kAuxHeaderBytes + manifest.vertex_count * 4)
        corrupt("degree file size mismatch");
    check_file_header(manifest.value_path(), kValueFileMagic,
                      kAuxHeaderBytes + manifest.vertex_count * 4);
    if (std::filesystem::file_size(manifest.value_path()) !=
        kAuxHeaderBytes + manifest.vertex_count * 4)
        corrupt("value file size mismatch");

    return manifest;
}

}  // namespace bishard
