#include "zetawalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace zetawalk {

Multigraph::Multigraph(VertexId n, std::vector<std::pair<VertexId, VertexId>> e)
    : n_vertices(n), edges(std::move(e)) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [u, v] = edges[k];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InputError("edge " + std::to_string(k) + " endpoint out of range [0, " +
                             std::to_string(n) + ")");
        }
    }
}

SymmetricDigraph::SymmetricDigraph(Multigraph g) : graph_(std::move(g)) {
    const auto m = graph_.edges.size();
    arcs_.resize(2 * m);
    out_index_.assign(static_cast<std::size_t>(graph_.n_vertices), {});
    in_index_.assign(static_cast<std::size_t>(graph_.n_vertices), {});
    for (std::size_t k = 0; k < m; ++k) {
        auto [u, v] = graph_.edges[k];
        const ArcId a = static_cast<ArcId>(2 * k);
        const ArcId b = a + 1;
        arcs_[static_cast<std::size_t>(a)] = Arc{a, u, v, b, static_cast<EdgeId>(k)};
        arcs_[static_cast<std::size_t>(b)] = Arc{b, v, u, a, static_cast<EdgeId>(k)};
    }
    for (const Arc& a : arcs_) {
        out_index_[static_cast<std::size_t>(a.tail)].push_back(a.id);
        in_index_[static_cast<std::size_t>(a.head)].push_back(a.id);
    }
}

const std::vector<ArcId>& SymmetricDigraph::out_arcs(VertexId v) const {
    if (v < 0 || v >= graph_.n_vertices)
        throw InputError("vertex " + std::to_string(v) + " out of range");
    return out_index_[static_cast<std::size_t>(v)];
}

const std::vector<ArcId>& SymmetricDigraph::in_arcs(VertexId v) const {
    if (v < 0 || v >= graph_.n_vertices)
        throw InputError("vertex " + std::to_string(v) + " out of range");
    return in_index_[static_cast<std::size_t>(v)];
}

SymmetricDigraph build_symmetric_digraph(Multigraph g) {
    return SymmetricDigraph(std::move(g));
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    long line_no = 0;
    bool saw_header = false;
    bool saw_edge = false;
    VertexId declared_n = -1;
    VertexId max_index = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_comment(raw);
        if (is_blank(line)) continue;

        std::istringstream fields(line);
        std::string first;
        fields >> first;
        if (first == "n") {
            if (saw_header) throw ParseError("duplicate header", line_no);
            if (saw_edge) throw ParseError("header must precede edges", line_no);
            long n;
            if (!(fields >> n) || n < 0) throw ParseError("bad vertex count", line_no);
            std::string extra;
            if (fields >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
            declared_n = static_cast<VertexId>(n);
            saw_header = true;
            continue;
        }

        long u, v;
        std::istringstream edge_fields(line);
        if (!(edge_fields >> u >> v)) throw ParseError("expected 'u v'", line_no);
        std::string extra;
        if (edge_fields >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        if (u < 0 || v < 0) throw ParseError("negative vertex index", line_no);
        saw_edge = true;
        max_index = std::max({max_index, static_cast<VertexId>(u), static_cast<VertexId>(v)});
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }

    VertexId n = saw_header ? declared_n : max_index + 1;
    if (max_index >= n)
        throw ParseError("edge endpoint " + std::to_string(max_index) +
                             " exceeds declared vertex count " + std::to_string(n),
                         0);
    return Multigraph(n, std::move(edges));
}

Multigraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "n " << g.n_vertices << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

bool is_connected(const Multigraph& g) {
    if (g.n_vertices <= 1) return true;
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(g.n_vertices));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n_vertices), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == static_cast<std::size_t>(g.n_vertices);
}

bool is_simple(const Multigraph& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [u, v] : g.edges) {
        if (u == v) return false;
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

}  // namespace zetawalk
