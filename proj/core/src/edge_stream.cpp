#include "dynclust/edge_stream.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "dynclust/graph.hpp"

namespace dynclust {

StreamParseError::StreamParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

EdgeStream parse_edge_stream(std::istream& in) {
    EdgeStream stream;
    std::optional<DynGraph> validator;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string cmd;
        if (!(fields >> cmd)) continue;

        if (cmd == "n") {
            if (validator) throw StreamParseError(lineno, "duplicate 'n' header");
            long long count = 0;
            if (!(fields >> count) || count <= 0 ||
                count > std::numeric_limits<VertexId>::max() - 1) {
                throw StreamParseError(lineno, "expected positive vertex count after 'n'");
            }
            stream.n = static_cast<std::size_t>(count);
            validator.emplace(stream.n);
        } else if (cmd == "e") {
            if (!validator) throw StreamParseError(lineno, "edge before 'n' header");
            long long u = -1;
            long long v = -1;
            double w = 0.0;
            if (!(fields >> u >> v >> w)) throw StreamParseError(lineno, "expected 'e <u> <v> <w>'");
            if (u < 0 || v < 0) throw StreamParseError(lineno, "negative vertex id");
            try {
                validator->validate_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), w);
            } catch (const std::invalid_argument& e) {
                throw StreamParseError(lineno, e.what());
            }
            stream.edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
        } else {
            throw StreamParseError(lineno, "unknown command '" + cmd + "'");
        }
        std::string extra;
        if (fields >> extra) throw StreamParseError(lineno, "trailing token '" + extra + "'");
    }
    if (!validator) throw StreamParseError(lineno, "missing 'n' header");
    return stream;
}

EdgeStream read_edge_stream(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_edge_stream(in);
}

void write_edge_stream(std::ostream& out, const EdgeStream& stream) {
    out << "n " << stream.n << '\n';
    out << std::setprecision(17);
    for (const auto& e : stream.edges) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

DynGraph build_graph(const EdgeStream& stream, std::size_t prefix) {
    DynGraph g(stream.n);
    const std::size_t count = std::min(prefix, stream.edges.size());
    for (std::size_t j = 0; j < count; ++j) g.insert_edge(stream.edges[j].u, stream.edges[j].v, stream.edges[j].w);
    return g;
}

} // namespace dynclust
