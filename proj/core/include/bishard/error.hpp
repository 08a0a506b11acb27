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

#ifndef BISHARD_ERROR_HPP
#define BISHARD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bishard {

enum class ErrorKind {
    malformed_line,     // edge-list line without two integer tokens
    empty_graph,        // operation requires at least one edge / vertex
    budget_too_small,   // one vertex's in-degree exceeds the interval budget
    bad_partition,      // partition request cannot produce valid intervals
    vertex_out_of_range,
    io_failure,
    corrupt_shard,
    corrupt_manifest,
    version_mismatch,
    offset_mismatch,    // block length disagrees with the manifest
    config_error,
    update_failed,      // user update function threw; message names the vertex
    no_convergence,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace bishard

#endif  // BISHARD_ERROR_HPP
