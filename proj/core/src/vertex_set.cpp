#include "dynclust/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace dynclust {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> ids)
    : bits_(universe, 0) {
    for (VertexId v : ids) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> ids)
    : bits_(universe, 0) {
    for (VertexId v : ids) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    s.count_ = universe;
    return s;
}

bool VertexSet::insert(VertexId v) {
    assert(v < bits_.size());
    if (bits_[v]) return false;
    bits_[v] = 1;
    ++count_;
    return true;
}

bool VertexSet::erase(VertexId v) {
    if (v >= bits_.size() || !bits_[v]) return false;
    bits_[v] = 0;
    --count_;
    return true;
}

void VertexSet::clear() {
    std::fill(bits_.begin(), bits_.end(), 0);
    count_ = 0;
}

std::vector<VertexId> VertexSet::to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count_);
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    assert(universe() == other.universe());
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (other.bits_[v] && !bits_[v]) {
            bits_[v] = 1;
            ++count_;
        }
    }
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    assert(universe() == other.universe());
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v] && !other.bits_[v]) {
            bits_[v] = 0;
            --count_;
        }
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    assert(universe() == other.universe());
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v] && other.bits_[v]) {
            bits_[v] = 0;
            --count_;
        }
    }
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v] && !other.contains(static_cast<VertexId>(v))) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t v = 0; v < bits_.size(); ++v) {
        if (bits_[v] && other.contains(static_cast<VertexId>(v))) return true;
    }
    return false;
}

VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

VertexSet retain(const VertexSet& from, std::size_t count) {
    VertexSet out(from.universe());
    for (std::size_t v = 0; v < from.universe() && out.size() < count; ++v) {
        if (from.contains(static_cast<VertexId>(v))) out.insert(static_cast<VertexId>(v));
    }
    return out;
}

} // namespace dynclust
