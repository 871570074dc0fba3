#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lightsout/gf2.hpp"

namespace lightsout {

/// Undirected edge, stored normalized with u < w.
struct Edge {
    std::size_t u;
    std::size_t w;

    Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), w(a < b ? b : a) {
        require(a != b, "Edge: self-loops are not allowed");
    }

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edits return new graphs. The empty graph (n = 0) is allowed.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; } // sorted, unique

    bool has_edge(std::size_t u, std::size_t w) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    bool operator==(const Graph&) const = default;

    // Common families, handy in tests and as join operands.
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph complete(std::size_t n);
    static Graph star(std::size_t leaves); // K_{1,leaves} with center 0

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// n-by-n symmetric matrix with entry (i,k) = 1 iff i = k or {i,k} is an edge.
/// Column i is the characteristic vector of the closed neighborhood of i.
BitMatrix closed_neighborhood_matrix(const Graph& g);

struct VertexDeletion {
    Graph graph;
    // old_to_new[v] is the new label, or -1 for the deleted vertex.
    std::vector<std::ptrdiff_t> old_to_new;
};

/// Removes v and incident edges; vertices above v shift down by one.
VertexDeletion delete_vertex(const Graph& g, std::size_t v);

Graph delete_edge(const Graph& g, const Edge& e);

struct JoinResult {
    Graph graph;
    std::size_t u; // label of G1's join vertex in the result
    std::size_t w; // label of G2's join vertex in the result
};

/// Disjoint union keeping G1's labels and offsetting G2's by |G1|,
/// plus the single edge (u, w + |G1|).
JoinResult join(const Graph& g1, std::size_t u, const Graph& g2, std::size_t w);

struct Join3Result {
    Graph graph;
    std::size_t x;
    std::size_t y;
    std::size_t z;
};

/// Disjoint union of three graphs plus the two edges (x,y) and (y,z).
Join3Result join3(const Graph& g1, std::size_t x, const Graph& g2, std::size_t y,
                  const Graph& g3, std::size_t z);

struct Component {
    Graph graph;
    // vertices[i] is the original label of the component's vertex i.
    std::vector<std::size_t> vertices;
};

/// Subgraph induced on the given vertices (sorted ascending original labels);
/// local index i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices);

std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g); // K1 is a tree; K0 is not
bool is_cut_edge(const Graph& g, const Edge& e);

/// Decodes a Prufer sequence of length n-2 (entries in [0,n)) into the
/// corresponding labeled tree on n >= 3 vertices.
Graph prufer_decode(std::size_t n, const std::vector<std::size_t>& seq);

/// Uniform random labeled tree via a Prufer sequence; deterministic given seed.
Graph random_tree(std::size_t n, std::uint64_t seed);
/// Each possible edge included independently with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Edge-list text format: line 1 = "n", then one "u w" pair per line
/// (0-based). '#' comments and blank lines are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
/// Emits normalized u < w edges in sorted order.
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace lightsout
