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

#ifndef BISHARD_SHARD_FORMAT_HPP
#define BISHARD_SHARD_FORMAT_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "bishard/types.hpp"

namespace bishard {

// On-disk formats, all little-endian.
//
//   in-shard:   "BSHIN001" + u64 record count + (u32 src, u32 dst, f32 value)*
//   out-shard:  "BSHOUT01" + u64 record count + (u32 src, u32 dst)*
//   degrees:    "BPDEG001" + n * u32 out-degree      (n comes from the manifest)
//   values:     "BPVAL001" + n * f32 vertex value
//
// Edges within a shard are sorted by source ascending, ties by destination
// ascending, then input order.

inline constexpr char kInShardMagic[9] = "BSHIN001";
inline constexpr char kOutShardMagic[9] = "BSHOUT01";
inline constexpr char kDegreeFileMagic[9] = "BPDEG001";
inline constexpr char kValueFileMagic[9] = "BPVAL001";

inline constexpr std::uint64_t kShardHeaderBytes = 16;   // magic + record count
inline constexpr std::uint64_t kAuxHeaderBytes = 8;      // magic only
inline constexpr std::uint64_t kInRecordBytes = 12;
inline constexpr std::uint64_t kOutRecordBytes = 8;

struct InShardRecord {
    vid_t src;
    vid_t dst;
    float value;

    friend bool operator==(const InShardRecord&, const InShardRecord&) = default;
};

// Full-file readers, used by the sharder's own verification paths, the stats
// command and the tests. The interval store does its own counted reads.
std::vector<InShardRecord> read_in_shard(const std::filesystem::path& path);
std::vector<Edge> read_out_shard(const std::filesystem::path& path);
std::vector<std::uint32_t> read_degree_file(const std::filesystem::path& path,
                                            std::uint64_t vertex_count);
std::vector<float> read_value_file(const std::filesystem::path& path,
                                   std::uint64_t vertex_count);

void write_degree_file(const std::filesystem::path& path,
                       const std::vector<std::uint32_t>& degrees);
void write_value_file(const std::filesystem::path& path, const std::vector<float>& values);

}  // namespace bishard

#endif  // BISHARD_SHARD_FORMAT_HPP
