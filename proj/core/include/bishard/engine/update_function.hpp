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

#ifndef BISHARD_ENGINE_UPDATE_FUNCTION_HPP
#define BISHARD_ENGINE_UPDATE_FUNCTION_HPP

#include "bishard/storage/interval_store.hpp"

namespace bishard {

/// The state one vertex may touch during an update: its own value, its
/// in-edge values (read-only) and its out-edge slots (write-only). Every
/// vertex holds private edge copies, so updates never race.
class VertexContext {
  public:
    VertexContext(IntervalSubgraph& subgraph, vid_t v) : subgraph_(&subgraph), v_(v) {}

    vid_t id() const { return v_; }

    float value() const { return subgraph_->vertex_value(v_); }
    void set_value(float value) { subgraph_->set_vertex_value(v_, value); }

    std::span<const InEdge> in_edges() const { return subgraph_->in_edges(v_); }

    std::uint32_t out_degree() const { return subgraph_->out_degree(v_); }
    vid_t out_target(std::uint32_t i) const { return subgraph_->out_target(v_, i); }
    void write_out_edge(std::uint32_t i, float value) { subgraph_->write_out_edge(v_, i, value); }

  private:
    IntervalSubgraph* subgraph_;
    vid_t v_;
};

/// Vertex kernel contract. update() must touch only its own context; the
/// engine runs it for all interval vertices in parallel with no locking.
/// Implementations should be stateless and reentrant.
class UpdateFunction {
  public:
    virtual ~UpdateFunction() = default;

    /// Initial vertex value, applied by the init pass.
    virtual float init_vertex(vid_t v, std::uint32_t out_degree) const = 0;

    /// Initial value of out-edge (src, dst), applied by the init pass.
    virtual float init_out_edge(vid_t src, vid_t dst, std::uint32_t src_out_degree) const = 0;

    virtual void update(VertexContext& ctx) const = 0;
};

}  // namespace bishard

#endif  // BISHARD_ENGINE_UPDATE_FUNCTION_HPP
