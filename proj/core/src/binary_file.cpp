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

#include "bishard/io/binary_file.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "bishard/error.hpp"

namespace bishard {

namespace {

[[noreturn]] void throw_io(const std::filesystem::path& path, const char* what) {
    throw Error(ErrorKind::io_failure,
                path.string() + ": " + what + ": " + std::strerror(errno));
}

}  // namespace

BinaryFile::BinaryFile(const std::filesystem::path& path, Mode mode) : path_(path) {
    switch (mode) {
        case Mode::read:
            fd_ = ::open(path.c_str(), O_RDONLY);
            break;
        case Mode::read_write:
            fd_ = ::open(path.c_str(), O_RDWR);
            break;
        case Mode::create:
            fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
            break;
    }
    if (fd_ < 0) throw_io(path_, "open");
}

BinaryFile::~BinaryFile() {
    if (fd_ >= 0) ::close(fd_);
}

BinaryFile::BinaryFile(BinaryFile&& other) noexcept
    : path_(std::move(other.path_)), fd_(other.fd_) {
    other.fd_ = -1;
}

BinaryFile& BinaryFile::operator=(BinaryFile&& other) noexcept {
    if (this != &other) {
        if (fd_ >= 0) ::close(fd_);
        path_ = std::move(other.path_);
        fd_ = other.fd_;
        other.fd_ = -1;
    }
    return *this;
}

std::uint64_t BinaryFile::size() const {
    struct stat st {};
    if (::fstat(fd_, &st) != 0) throw_io(path_, "fstat");
    return static_cast<std::uint64_t>(st.st_size);
}

std::vector<std::uint8_t> BinaryFile::read_all() const {
    std::vector<std::uint8_t> buf(size());
    read_at(0, buf);
    return buf;
}

void BinaryFile::read_at(std::uint64_t offset, std::span<std::uint8_t> out) const {
    std::size_t done = 0;
    while (done < out.size()) {
        ssize_t n = ::pread(fd_, out.data() + done, out.size() - done,
                            static_cast<off_t>(offset + done));
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_io(path_, "pread");
        }
        if (n == 0)
            throw Error(ErrorKind::io_failure, path_.string() + ": unexpected end of file");
        done += static_cast<std::size_t>(n);
    }
}

void BinaryFile::write_at(std::uint64_t offset, std::span<const std::uint8_t> data) {
    std::size_t done = 0;
    while (done < data.size()) {
        ssize_t n = ::pwrite(fd_, data.data() + done, data.size() - done,
                             static_cast<off_t>(offset + done));
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_io(path_, "pwrite");
        }
        done += static_cast<std::size_t>(n);
    }
}

void BinaryFile::append(std::span<const std::uint8_t> data) {
    std::size_t done = 0;
    while (done < data.size()) {
        ssize_t n = ::write(fd_, data.data() + done, data.size() - done);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw_io(path_, "write");
        }
        done += static_cast<std::size_t>(n);
    }
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
    BinaryFile f(path, BinaryFile::Mode::create);
    f.append(data);
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed_line: return "MalformedLine";
        case ErrorKind::empty_graph: return "EmptyGraph";
        case ErrorKind::budget_too_small: return "BudgetTooSmall";
        case ErrorKind::bad_partition: return "BadPartition";
        case ErrorKind::vertex_out_of_range: return "VertexOutOfRange";
        case ErrorKind::io_failure: return "IoFailure";
        case ErrorKind::corrupt_shard: return "CorruptShard";
        case ErrorKind::corrupt_manifest: return "CorruptManifest";
        case ErrorKind::version_mismatch: return "VersionMismatch";
        case ErrorKind::offset_mismatch: return "OffsetMismatch";
        case ErrorKind::config_error: return "ConfigError";
        case ErrorKind::update_failed: return "UpdateFailed";
        case ErrorKind::no_convergence: return "NoConvergence";
    }
    return "UnknownError";
}

}  // namespace bishard
