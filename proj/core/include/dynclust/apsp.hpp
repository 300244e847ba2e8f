#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynclust/graph.hpp"

namespace dynclust {

/// Exact all-pairs distances kept current under edge insertions in O(n^2)
/// per insertion. Meant for verification on small graphs.
class IncrementalApsp {
public:
    explicit IncrementalApsp(const DynGraph& g);

    std::size_t size() const { return n_; }
    Distance operator()(VertexId a, VertexId b) const { return d_[a * n_ + b]; }
    const Distance* row(VertexId a) const { return d_.data() + a * n_; }

    void insert_edge(VertexId u, VertexId v, Distance w);

    /// min over s in sources of d(s, v).
    Distance to_set(std::span<const VertexId> sources, VertexId v) const;

    std::vector<std::vector<Distance>> to_matrix() const;

private:
    std::size_t n_;
    std::vector<Distance> d_;
};

} // namespace dynclust
