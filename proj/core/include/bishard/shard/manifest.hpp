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

#ifndef BISHARD_SHARD_MANIFEST_HPP
#define BISHARD_SHARD_MANIFEST_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bishard/shard/interval.hpp"

namespace bishard {

inline constexpr std::uint32_t kManifestVersion = 1;

/// Byte extent of one scatter block inside an in-shard file. Offsets are
/// absolute file offsets; the record region of in-shard(q) starts right after
/// the 16-byte header and is tiled exactly by the blocks (p, q), p ascending.
struct BlockExtent {
    std::uint64_t offset = 0;
    std::uint64_t length = 0;

    friend bool operator==(const BlockExtent&, const BlockExtent&) = default;
};

/// Dense (source interval, target interval) -> extent table.
class BlockOffsetTable {
  public:
    BlockOffsetTable() = default;
    explicit BlockOffsetTable(std::uint32_t interval_count)
        : interval_count_(interval_count),
          extents_(static_cast<std::size_t>(interval_count) * interval_count) {}

    std::uint32_t interval_count() const { return interval_count_; }

    BlockExtent& at(std::uint32_t source_interval, std::uint32_t target_interval) {
        return extents_[index(source_interval, target_interval)];
    }
    const BlockExtent& at(std::uint32_t source_interval, std::uint32_t target_interval) const {
        return extents_[index(source_interval, target_interval)];
    }

    friend bool operator==(const BlockOffsetTable&, const BlockOffsetTable&) = default;

  private:
    std::size_t index(std::uint32_t p, std::uint32_t q) const {
        return static_cast<std::size_t>(q) * interval_count_ + p;
    }

    std::uint32_t interval_count_ = 0;
    std::vector<BlockExtent> extents_;
};

/// Complete description of a sharded graph on disk. Paths are stored relative
/// to the manifest file; base_dir is filled in when reading or writing and is
/// not part of structural equality.
struct GraphManifest {
    std::uint32_t format_version = kManifestVersion;
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::uint32_t interval_count = 0;
    std::vector<IntervalRange> intervals;
    std::vector<std::string> in_shard_paths;
    std::vector<std::string> out_shard_paths;
    std::string degree_file;
    std::string value_file;
    BlockOffsetTable blocks;

    std::filesystem::path base_dir;

    std::filesystem::path in_shard(std::uint32_t p) const { return base_dir / in_shard_paths[p]; }
    std::filesystem::path out_shard(std::uint32_t p) const {
        return base_dir / out_shard_paths[p];
    }
    std::filesystem::path degree_path() const { return base_dir / degree_file; }
    std::filesystem::path value_path() const { return base_dir / value_file; }

    friend bool operator==(const GraphManifest& a, const GraphManifest& b) {
        return a.format_version == b.format_version && a.vertex_count == b.vertex_count &&
               a.edge_count == b.edge_count && a.interval_count == b.interval_count &&
               a.intervals == b.intervals && a.in_shard_paths == b.in_shard_paths &&
               a.out_shard_paths == b.out_shard_paths && a.degree_file == b.degree_file &&
               a.value_file == b.value_file && a.blocks == b.blocks;
    }
};

/// Writes the manifest as line-oriented text next to the shard files.
void write_manifest(const GraphManifest& manifest, const std::filesystem::path& path);

/// Reads and fully validates a manifest: version gate, interval invariants,
/// referenced files present with matching headers, block table tiling.
/// Throws version_mismatch or corrupt_manifest with the failing reason.
GraphManifest read_manifest(const std::filesystem::path& path);

}  // namespace bishard

#endif  // BISHARD_SHARD_MANIFEST_HPP
