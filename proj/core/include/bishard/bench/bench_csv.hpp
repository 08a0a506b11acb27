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

#ifndef BISHARD_BENCH_BENCH_CSV_HPP
#define BISHARD_BENCH_BENCH_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace bishard {

/// One benchmark measurement: counters are totals over the measured
/// iterations (the init pass is excluded), psw_predicted_reads is the
/// analytical model normalized the same way (P*P per pass).
struct BenchRow {
    std::uint32_t shard_count = 0;
    std::string algorithm;
    std::uint32_t iterations = 0;
    double wall_seconds = 0.0;
    std::uint64_t edge_shard_nonseq_reads = 0;
    std::uint64_t scatter_nonseq_writes = 0;
    std::uint64_t bytes_read = 0;
    std::uint64_t bytes_written = 0;
    std::uint64_t psw_predicted_reads = 0;
};

/// Header plus one comma-separated line per row; floats carry 6 significant
/// digits. Rows must be non-empty (config_error); write failures raise
/// Error(io_failure).
void emit_bench_csv(std::span<const BenchRow> rows, const std::filesystem::path& path);

}  // namespace bishard

#endif  // BISHARD_BENCH_BENCH_CSV_HPP
