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

#ifndef BISHARD_IO_BINARY_FILE_HPP
#define BISHARD_IO_BINARY_FILE_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <span>
#include <vector>

namespace bishard {

// All on-disk integers and floats are little-endian. The store/load helpers
// below are byte-order independent.

inline void store_u32(std::uint8_t* out, std::uint32_t v) {
    out[0] = static_cast<std::uint8_t>(v);
    out[1] = static_cast<std::uint8_t>(v >> 8);
    out[2] = static_cast<std::uint8_t>(v >> 16);
    out[3] = static_cast<std::uint8_t>(v >> 24);
}

inline void store_u64(std::uint8_t* out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

inline void store_f32(std::uint8_t* out, float v) {
    store_u32(out, std::bit_cast<std::uint32_t>(v));
}

inline std::uint32_t load_u32(const std::uint8_t* in) {
    return static_cast<std::uint32_t>(in[0]) | (static_cast<std::uint32_t>(in[1]) << 8) |
           (static_cast<std::uint32_t>(in[2]) << 16) | (static_cast<std::uint32_t>(in[3]) << 24);
}

inline std::uint64_t load_u64(const std::uint8_t* in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[i]) << (8 * i);
    return v;
}

inline float load_f32(const std::uint8_t* in) {
    return std::bit_cast<float>(load_u32(in));
}

/// Thin RAII wrapper over a POSIX file descriptor. Every failure throws
/// Error(io_failure) carrying the path and errno text.
class BinaryFile {
  public:
    enum class Mode { read, read_write, create };

    BinaryFile(const std::filesystem::path& path, Mode mode);
    ~BinaryFile();

    BinaryFile(BinaryFile&& other) noexcept;
    BinaryFile& operator=(BinaryFile&& other) noexcept;
    BinaryFile(const BinaryFile&) = delete;
    BinaryFile& operator=(const BinaryFile&) = delete;

    std::uint64_t size() const;

    /// One sequential scan of the whole file.
    std::vector<std::uint8_t> read_all() const;

    void read_at(std::uint64_t offset, std::span<std::uint8_t> out) const;
    void write_at(std::uint64_t offset, std::span<const std::uint8_t> data);

    /// Append at the current write position (create mode).
    void append(std::span<const std::uint8_t> data);

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    int fd_ = -1;
};

/// Convenience: write a whole buffer to a fresh file.
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data);

}  // namespace bishard

#endif  // BISHARD_IO_BINARY_FILE_HPP
