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

#ifndef BISHARD_BENCH_PSW_MODEL_HPP
#define BISHARD_BENCH_PSW_MODEL_HPP

#include <cstdint>

namespace bishard {

struct SeekCounts {
    std::uint64_t reads = 0;
    std::uint64_t writes = 0;

    friend bool operator==(const SeekCounts&, const SeekCounts&) = default;
};

/// Analytical (not measured) seek model of a parallel-sliding-windows engine:
/// each interval reads its own memory shard plus a window of each of the
/// other P-1 shards, P non-sequential reads per interval, and writes them all
/// back, so one full pass costs P*P reads and P*P writes.
SeekCounts psw_predicted_seeks(std::uint32_t interval_count);

/// Per-pass seek costs of both engines for a given shard count. The dual-shard
/// engine needs fewer reads than the sliding-windows model for every P >= 3,
/// and its total seek share approaches one half as P grows.
struct PswCostModel {
    std::uint32_t interval_count = 1;

    std::uint64_t psw_reads_per_pass() const {
        return static_cast<std::uint64_t>(interval_count) * interval_count;
    }
    std::uint64_t psw_writes_per_pass() const { return psw_reads_per_pass(); }
    std::uint64_t bp_reads_per_pass() const { return 2ull * interval_count; }
    std::uint64_t bp_scatter_writes_upper_bound() const { return psw_reads_per_pass(); }

    /// (BP reads + BP scatter-write bound) / (PSW reads + writes) = 1/2 + 1/P.
    double total_seek_ratio_upper_bound() const {
        return static_cast<double>(bp_reads_per_pass() + bp_scatter_writes_upper_bound()) /
               static_cast<double>(psw_reads_per_pass() + psw_writes_per_pass());
    }
};

}  // namespace bishard

#endif  // BISHARD_BENCH_PSW_MODEL_HPP
