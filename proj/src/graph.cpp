#include "lightsout/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace lightsout {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (const Edge& e : edges_)
        require(e.w < n_, "Graph: edge endpoint out of range");
    std::sort(edges_.begin(), edges_.end());
    require(std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end(),
            "Graph: duplicate edge");
}

bool Graph::has_edge(std::size_t u, std::size_t w) const {
    if (u == w) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(u, w));
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    require(v < n_, "Graph::neighbors: vertex out of range");
    std::vector<std::size_t> out;
    for (const Edge& e : edges_) {
        if (e.u == v) out.push_back(e.w);
        else if (e.w == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Graph::degree(std::size_t v) const { return neighbors(v).size(); }

Graph Graph::path(std::size_t n) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph Graph::cycle(std::size_t n) {
    require(n >= 3, "Graph::cycle: need at least 3 vertices");
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, std::move(es));
}

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph Graph::star(std::size_t leaves) {
    std::vector<Edge> es;
    for (std::size_t i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, std::move(es));
}

BitMatrix closed_neighborhood_matrix(const Graph& g) {
    std::size_t n = g.vertex_count();
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    for (const Edge& e : g.edges()) {
        m.set(e.u, e.w, true);
        m.set(e.w, e.u, true);
    }
    return m;
}

VertexDeletion delete_vertex(const Graph& g, std::size_t v) {
    require(v < g.vertex_count(), "delete_vertex: vertex out of range");
    std::vector<std::ptrdiff_t> map(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        map[i] = i < v ? static_cast<std::ptrdiff_t>(i)
               : i == v ? -1
                        : static_cast<std::ptrdiff_t>(i - 1);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (e.u != v && e.w != v)
            es.emplace_back(static_cast<std::size_t>(map[e.u]),
                            static_cast<std::size_t>(map[e.w]));
    return VertexDeletion{Graph(g.vertex_count() - 1, std::move(es)), std::move(map)};
}

Graph delete_edge(const Graph& g, const Edge& e) {
    require(g.has_edge(e.u, e.w), "delete_edge: edge not present");
    std::vector<Edge> es;
    for (const Edge& f : g.edges())
        if (!(f == e)) es.push_back(f);
    return Graph(g.vertex_count(), std::move(es));
}

JoinResult join(const Graph& g1, std::size_t u, const Graph& g2, std::size_t w) {
    require(g1.vertex_count() > 0 && g2.vertex_count() > 0, "join: operands must be nonempty");
    require(u < g1.vertex_count() && w < g2.vertex_count(), "join: vertex out of range");
    std::size_t off = g1.vertex_count();
    std::vector<Edge> es = g1.edges();
    for (const Edge& e : g2.edges()) es.emplace_back(e.u + off, e.w + off);
    es.emplace_back(u, w + off);
    return JoinResult{Graph(off + g2.vertex_count(), std::move(es)), u, w + off};
}

Join3Result join3(const Graph& g1, std::size_t x, const Graph& g2, std::size_t y,
                  const Graph& g3, std::size_t z) {
    JoinResult h = join(g1, x, g2, y);
    JoinResult k = join(h.graph, h.w, g3, z);
    return Join3Result{k.graph, x, h.w, k.w};
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices) {
    require(std::is_sorted(vertices.begin(), vertices.end()) &&
                std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end(),
            "induced_subgraph: vertices must be sorted and distinct");
    for (std::size_t v : vertices)
        require(v < g.vertex_count(), "induced_subgraph: vertex out of range");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        auto iu = std::lower_bound(vertices.begin(), vertices.end(), e.u);
        auto iw = std::lower_bound(vertices.begin(), vertices.end(), e.w);
        if (iu != vertices.end() && *iu == e.u && iw != vertices.end() && *iw == e.w)
            edges.emplace_back(static_cast<std::size_t>(iu - vertices.begin()),
                               static_cast<std::size_t>(iw - vertices.begin()));
    }
    return Graph(vertices.size(), std::move(edges));
}

std::vector<Component> components(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::ptrdiff_t> comp(n, -1);
    std::size_t ncomp = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = static_cast<std::ptrdiff_t>(ncomp);
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = static_cast<std::ptrdiff_t>(ncomp);
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<Component> out(ncomp);
    std::vector<std::size_t> local(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto& c = out[static_cast<std::size_t>(comp[v])];
        local[v] = c.vertices.size();
        c.vertices.push_back(v);
    }
    std::vector<std::vector<Edge>> edges(ncomp);
    for (const Edge& e : g.edges())
        edges[static_cast<std::size_t>(comp[e.u])].emplace_back(local[e.u], local[e.w]);
    for (std::size_t i = 0; i < ncomp; ++i)
        out[i].graph = Graph(out[i].vertices.size(), std::move(edges[i]));
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() > 0 && components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

bool is_cut_edge(const Graph& g, const Edge& e) {
    require(g.has_edge(e.u, e.w), "is_cut_edge: edge not present");
    return components(delete_edge(g, e)).size() > components(g).size();
}

Graph prufer_decode(std::size_t n, const std::vector<std::size_t>& prufer) {
    require(n >= 3 && prufer.size() == n - 2, "prufer_decode: need n >= 3 and n-2 entries");
    for (std::size_t x : prufer) require(x < n, "prufer_decode: entry out of range");
    std::vector<std::size_t> deg(n, 1);
    for (std::size_t x : prufer) ++deg[x];
    std::vector<Edge> es;
    // Smallest-leaf decoding of the Prufer sequence.
    std::size_t ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    std::size_t leaf = ptr;
    for (std::size_t x : prufer) {
        es.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    // The last two remaining vertices: leaf and n-1.
    es.emplace_back(leaf, n - 1);
    return Graph(n, std::move(es));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    require(n >= 1, "random_tree: need at least one vertex");
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {Edge(0, 1)});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    std::vector<std::size_t> prufer(n - 2);
    for (auto& x : prufer) x = dist(rng);
    return prufer_decode(n, prufer);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, "random_graph: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    bool have_n = false;
    std::size_t n = 0;
    std::vector<Edge> es;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!have_n) {
            if (!(ls >> n)) {
                std::string tok;
                if (ls.clear(), ls >> tok)
                    throw contract_violation("edge list: expected vertex count on line " +
                                             std::to_string(lineno));
                continue; // blank/comment line before the header
            }
            have_n = true;
        } else {
            std::size_t u, w;
            if (!(ls >> u)) continue; // blank/comment line
            if (!(ls >> w))
                throw contract_violation("edge list: expected 'u w' on line " +
                                         std::to_string(lineno));
            if (u >= n || w >= n || u == w)
                throw contract_violation("edge list: bad edge on line " +
                                         std::to_string(lineno));
            es.emplace_back(u, w);
        }
        std::string trailing;
        if (ls >> trailing)
            throw contract_violation("edge list: trailing tokens on line " +
                                     std::to_string(lineno));
    }
    if (!have_n) throw contract_violation("edge list: missing vertex count");
    return Graph(n, std::move(es));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw contract_violation("cannot open graph file: " + path);
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.w << '\n';
}

} // namespace lightsout
