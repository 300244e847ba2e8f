#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "dynclust/types.hpp"

namespace dynclust {

/// Subset of a fixed universe [0, n) stored as a membership bitmap.
///
/// Iteration is always in increasing id order, which is what the
/// lowest-id-first Retain rule relies on.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> ids);
    VertexSet(std::size_t universe, std::span<const VertexId> ids);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(VertexId v) const { return v < bits_.size() && bits_[v] != 0; }

    /// Returns true if v was not present before.
    bool insert(VertexId v);
    /// Returns true if v was present before.
    bool erase(VertexId v);
    void clear();

    std::vector<VertexId> to_vector() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t v = 0; v < bits_.size(); ++v) {
            if (bits_[v]) f(static_cast<VertexId>(v));
        }
    }

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.count_ == b.count_ && a.bits_ == b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

VertexSet operator|(VertexSet a, const VertexSet& b);
VertexSet operator&(VertexSet a, const VertexSet& b);
VertexSet operator-(VertexSet a, const VertexSet& b);

/// The `count` lowest-id members of `from` (all of them if fewer exist).
VertexSet retain(const VertexSet& from, std::size_t count);

} // namespace dynclust
