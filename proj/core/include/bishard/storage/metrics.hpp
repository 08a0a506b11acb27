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

#ifndef BISHARD_STORAGE_METRICS_HPP
#define BISHARD_STORAGE_METRICS_HPP

#include <atomic>
#include <cstdint>

namespace bishard {

/// I/O counters for one store. A "non-sequential" access is one that requires
/// a seek: opening a file or jumping to a discontiguous offset. A full
/// sequential scan of one shard counts as a single non-sequential read.
struct IoMetrics {
    std::uint64_t edge_shard_nonseq_reads = 0;  // whole-shard loads
    std::uint64_t scatter_nonseq_writes = 0;    // per-block write-back touches
    std::uint64_t vertex_file_accesses = 0;     // value-file slice reads/writes
    std::uint64_t bytes_read = 0;
    std::uint64_t bytes_written = 0;

    friend bool operator==(const IoMetrics&, const IoMetrics&) = default;
};

/// Atomic counter set behind IoMetrics; snapshot() is consistent with respect
/// to concurrent increments of individual counters.
class MetricsCounters {
  public:
    void add_edge_shard_read(std::uint64_t bytes) {
        edge_shard_nonseq_reads_.fetch_add(1, std::memory_order_relaxed);
        bytes_read_.fetch_add(bytes, std::memory_order_relaxed);
    }
    void add_scatter_write(std::uint64_t bytes) {
        scatter_nonseq_writes_.fetch_add(1, std::memory_order_relaxed);
        bytes_written_.fetch_add(bytes, std::memory_order_relaxed);
    }
    void add_vertex_access_read(std::uint64_t bytes) {
        vertex_file_accesses_.fetch_add(1, std::memory_order_relaxed);
        bytes_read_.fetch_add(bytes, std::memory_order_relaxed);
    }
    void add_vertex_access_write(std::uint64_t bytes) {
        vertex_file_accesses_.fetch_add(1, std::memory_order_relaxed);
        bytes_written_.fetch_add(bytes, std::memory_order_relaxed);
    }
    void add_bytes_read(std::uint64_t bytes) {
        bytes_read_.fetch_add(bytes, std::memory_order_relaxed);
    }

    IoMetrics snapshot() const {
        IoMetrics m;
        m.edge_shard_nonseq_reads = edge_shard_nonseq_reads_.load(std::memory_order_relaxed);
        m.scatter_nonseq_writes = scatter_nonseq_writes_.load(std::memory_order_relaxed);
        m.vertex_file_accesses = vertex_file_accesses_.load(std::memory_order_relaxed);
        m.bytes_read = bytes_read_.load(std::memory_order_relaxed);
        m.bytes_written = bytes_written_.load(std::memory_order_relaxed);
        return m;
    }

    void reset() {
        edge_shard_nonseq_reads_.store(0, std::memory_order_relaxed);
        scatter_nonseq_writes_.store(0, std::memory_order_relaxed);
        vertex_file_accesses_.store(0, std::memory_order_relaxed);
        bytes_read_.store(0, std::memory_order_relaxed);
        bytes_written_.store(0, std::memory_order_relaxed);
    }

  private:
    std::atomic<std::uint64_t> edge_shard_nonseq_reads_{0};
    std::atomic<std::uint64_t> scatter_nonseq_writes_{0};
    std::atomic<std::uint64_t> vertex_file_accesses_{0};
    std::atomic<std::uint64_t> bytes_read_{0};
    std::atomic<std::uint64_t> bytes_written_{0};
};

}  // namespace bishard

#endif  // BISHARD_STORAGE_METRICS_HPP
