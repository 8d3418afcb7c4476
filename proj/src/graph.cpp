#include "dmst/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "dmst/dsu.hpp"
#include "dmst/rng.hpp"

namespace dmst {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::int64_t to_int(std::string_view token, std::size_t line) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("malformed integer '" + std::string(token) + "'", line);
    return value;
}

Weight abs_weight(Weight w) { return w < 0 ? -w : w; }

}  // namespace

void Graph::validate() const {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > 0 && (root < 0 || root >= n)) throw std::invalid_argument("root out of range");
    for (const Edge& e : edges) {
        if (e.origin < 0 || e.origin >= n || e.target < 0 || e.target >= n)
            throw std::invalid_argument("edge endpoint out of range");
    }
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_tokens = [&](std::vector<std::string_view>& tokens) {
        while (std::getline(in, line)) {
            ++line_no;
            tokens = split_ws(line);
            if (!tokens.empty()) return true;
        }
        return false;
    };

    std::vector<std::string_view> tokens;
    if (!next_tokens(tokens)) throw ParseError("missing header", line_no + 1);
    if (tokens.size() != 3) throw ParseError("malformed header, expected 'n m r'", line_no);
    const std::int64_t n = to_int(tokens[0], line_no);
    const std::int64_t m = to_int(tokens[1], line_no);
    const std::int64_t r = to_int(tokens[2], line_no);
    if (n < 1 || n > INT32_MAX) throw ParseError("vertex count out of range", line_no);
    if (m < 0 || m > INT32_MAX) throw ParseError("edge count out of range", line_no);
    if (r < 0 || r >= n) throw ParseError("root out of range", line_no);

    const Weight weight_bound = n > kMaxVerticesWideWeights ? kMaxAbsWeightLargeGraph : kMaxAbsWeight;

    Graph g;
    g.n = static_cast<Vertex>(n);
    g.root = static_cast<Vertex>(r);
    g.edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        if (!next_tokens(tokens)) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i), line_no + 1);
        if (tokens.size() != 3) throw ParseError("malformed edge line, expected 'u v w'", line_no);
        const std::int64_t u = to_int(tokens[0], line_no);
        const std::int64_t v = to_int(tokens[1], line_no);
        const std::int64_t w = to_int(tokens[2], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("index out of range", line_no);
        if (abs_weight(w) > weight_bound) throw ParseError("weight out of bound", line_no);
        g.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
    if (next_tokens(tokens)) throw ParseError("unexpected data after last edge", line_no);
    return g;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
    out << graph.n << ' ' << graph.m() << ' ' << graph.root << '\n';
    for (const Edge& e : graph.edges) out << e.origin << ' ' << e.target << ' ' << e.weight << '\n';
}

std::string to_edge_list(const Graph& graph) {
    std::ostringstream out;
    write_edge_list(out, graph);
    return out.str();
}

Graph parse_konect(std::istream& in) {
    Graph g;
    std::string line;
    std::size_t line_no = 0;
    std::int64_t max_index = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '%' || tokens[0].front() == '#') continue;
        if (tokens.size() < 2) throw ParseError("malformed edge line, expected 'u v'", line_no);
        const std::int64_t u = to_int(tokens[0], line_no);
        const std::int64_t v = to_int(tokens[1], line_no);
        if (u < 0 || v < 0 || u >= INT32_MAX || v >= INT32_MAX) throw ParseError("index out of range", line_no);
        max_index = std::max({max_index, u, v});
        g.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 0});
    }
    g.n = static_cast<Vertex>(max_index + 1);
    g.root = 0;
    return g;
}

Graph sample_weights(const Graph& graph, std::uint64_t seed, Weight max_w) {
    if (max_w < 1) throw std::invalid_argument("sample_weights: max_w must be at least 1");
    SplitMix64 rng(seed);
    Graph out = graph;
    for (Edge& e : out.edges) e.weight = rng.uniform(1, max_w);
    return out;
}

RootedInstance attach_super_root(const Graph& graph) {
    if (graph.n <= 0) throw std::invalid_argument("attach_super_root: empty graph");
    graph.validate();

    PlainDsu weak(graph.n);
    for (const Edge& e : graph.edges) weak.join(e.origin, e.target);

    Vertex best = 0;
    for (Vertex v = 1; v < graph.n; ++v) {
        if (weak.set_size(v) > weak.set_size(best)) best = v;
    }
    const Vertex component = weak.find(best);

    RootedInstance out;
    std::vector<Vertex> renumber(static_cast<std::size_t>(graph.n), kNoVertex);
    for (Vertex v = 0; v < graph.n; ++v) {
        if (weak.find(v) != component) continue;
        renumber[v] = static_cast<Vertex>(out.original_vertex.size());
        out.original_vertex.push_back(v);
    }
    const auto kept = static_cast<Vertex>(out.original_vertex.size());

    Weight max_abs = 0;
    for (EdgeId id = 0; id < graph.m(); ++id) {
        const Edge& e = graph.edges[id];
        max_abs = std::max(max_abs, abs_weight(e.weight));
        if (renumber[e.origin] == kNoVertex) continue;
        out.graph.edges.push_back({renumber[e.origin], renumber[e.target], e.weight});
        out.original_edge.push_back(id);
    }

    out.sentinel = (max_abs + 1) * kept;
    out.graph.n = kept + 1;
    out.graph.root = kept;
    for (Vertex v = 0; v < kept; ++v) {
        out.graph.edges.push_back({kept, v, out.sentinel});
        out.original_edge.push_back(kNoEdge);
    }
    return out;
}

}  // namespace dmst
