#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynclust/graph.hpp"
#include "dynclust/types.hpp"

namespace dynclust {

struct EdgeInsertion {
    VertexId u;
    VertexId v;
    Distance w;
};

/// Text stream format:
///
///     n <count>
///     e <u> <v> <w>
///     ...
///
/// one command per line, whitespace separated, edges in insertion order.
struct EdgeStream {
    std::size_t n = 0;
    std::vector<EdgeInsertion> edges;
};

class StreamParseError : public std::runtime_error {
public:
    StreamParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses and validates a stream (ids in range, no self-loops, weights
/// accepted by DynGraph). Blank lines are skipped.
EdgeStream parse_edge_stream(std::istream& in);
EdgeStream read_edge_stream(const std::filesystem::path& path);

void write_edge_stream(std::ostream& out, const EdgeStream& stream);

/// Graph holding the first `prefix` insertions of the stream (all by default).
DynGraph build_graph(const EdgeStream& stream, std::size_t prefix = static_cast<std::size_t>(-1));

} // namespace dynclust
