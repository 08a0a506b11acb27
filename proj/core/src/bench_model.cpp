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

#include <cinttypes>
#include <cstdio>
#include <string>

#include "bishard/bench/bench_csv.hpp"
#include "bishard/bench/psw_model.hpp"
#include "bishard/error.hpp"
#include "bishard/io/binary_file.hpp"

namespace bishard {

SeekCounts psw_predicted_seeks(std::uint32_t interval_count) {
    PswCostModel model{interval_count};
    return SeekCounts{model.psw_reads_per_pass(), model.psw_writes_per_pass()};
}

void emit_bench_csv(std::span<const BenchRow> rows, const std::filesystem::path& path) {
    if (rows.empty()) throw Error(ErrorKind::config_error, "no benchmark rows to emit");

    std::string text =
        "P,algorithm,iterations,wall_seconds,edge_shard_nonseq_reads,scatter_nonseq_writes,"
        "bytes_read,bytes_written,psw_predicted_reads\n";
    char line[512];
    for (const BenchRow& row : rows) {
        std::snprintf(line, sizeof(line),
                      "%u,%s,%u,%.6g,%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64
                      "\n",
                      row.shard_count, row.algorithm.c_str(), row.iterations, row.wall_seconds,
                      row.edge_shard_nonseq_reads, row.scatter_nonseq_writes, row.bytes_read,
                      row.bytes_written, row.psw_predicted_reads);
        text += line;
    }
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace bishard
