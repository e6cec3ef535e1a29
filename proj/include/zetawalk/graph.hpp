#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zetawalk/errors.hpp"

namespace zetawalk {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using EdgeId = std::int32_t;

// Finite undirected multigraph. The edge list is a multiset: duplicate pairs
// are parallel edges, {v,v} is a loop. Edge order is significant — it fixes
// the arc indexing of the symmetric digraph.
struct Multigraph {
    VertexId n_vertices = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;

    Multigraph() = default;
    Multigraph(VertexId n, std::vector<std::pair<VertexId, VertexId>> e);

    std::size_t n_edges() const { return edges.size(); }
};

// One directed arc of the symmetric digraph. Every edge {u,v} contributes the
// pair a=(u,v), mate(a)=(v,u); a loop contributes two distinct arcs with
// tail == head.
struct Arc {
    ArcId id = -1;
    VertexId tail = -1;
    VertexId head = -1;
    ArcId mate = -1;
    EdgeId edge = -1;
};

// Symmetric digraph of a multigraph: 2|E| arcs in edge order (arc 2k, then
// its mate 2k+1), with per-vertex out/in arc indices. Immutable after
// construction; all members may be shared across threads.
class SymmetricDigraph {
  public:
    explicit SymmetricDigraph(Multigraph g);

    const Multigraph& graph() const { return graph_; }
    VertexId n_vertices() const { return graph_.n_vertices; }
    std::size_t n_arcs() const { return arcs_.size(); }

    const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    ArcId mate(ArcId a) const { return arc(a).mate; }
    VertexId tail(ArcId a) const { return arc(a).tail; }
    VertexId head(ArcId a) const { return arc(a).head; }

    // Arcs with tail v / head v, in ascending arc order.
    const std::vector<ArcId>& out_arcs(VertexId v) const;
    const std::vector<ArcId>& in_arcs(VertexId v) const;

    // deg(v) = |arc_{v*}|: a loop at v contributes two arcs.
    std::size_t degree(VertexId v) const { return out_arcs(v).size(); }

  private:
    Multigraph graph_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> out_index_;
    std::vector<std::vector<ArcId>> in_index_;
};

SymmetricDigraph build_symmetric_digraph(Multigraph g);

// Edge-list text format: optional header "n <count>", then one edge "u v"
// per line, 0-based; '#' starts a comment. Vertices default to 0..max index.
Multigraph parse_graph(const std::string& text);
Multigraph parse_graph_file(const std::string& path);
std::string serialize_graph(const Multigraph& g);

bool is_connected(const Multigraph& g);
bool is_simple(const Multigraph& g);

}  // namespace zetawalk
