#pragma once

#include <cstddef>
#include <vector>

#include "dynclust/types.hpp"
#include "dynclust/vertex_set.hpp"

namespace dynclust {

/// Total map sigma: V -> V with per-center preimage counts.
class Assignment {
public:
    Assignment() = default;
    /// Identity assignment on n vertices.
    explicit Assignment(std::size_t n);

    std::size_t size() const { return sigma_.size(); }
    VertexId operator[](VertexId v) const { return sigma_[v]; }
    const std::vector<VertexId>& map() const { return sigma_; }

    /// |sigma^{-1}(s)|.
    std::size_t count(VertexId s) const { return counts_[s]; }
    const std::vector<std::size_t>& counts() const { return counts_; }

    void assign(VertexId v, VertexId center);

    /// Vertices with a nonempty preimage.
    VertexSet image() const;

private:
    std::vector<VertexId> sigma_;
    std::vector<std::size_t> counts_;
};

} // namespace dynclust
