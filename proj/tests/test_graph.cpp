#include "doctest.h"

#include <set>
#include <sstream>

#include "lightsout/graph.hpp"
#include "test_support.hpp"

using namespace lightsout;

TEST_CASE("construction rejects loops, duplicates, and range errors") {
    CHECK_THROWS_AS(Edge(2, 2), contract_violation);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 1), Edge(1, 0)}), contract_violation);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 5)}), contract_violation);
    CHECK(Edge(3, 1).u == 1);
}

TEST_CASE("closed neighborhood matrix") {
    BitMatrix k1 = closed_neighborhood_matrix(Graph(1, {}));
    CHECK(k1.get(0, 0));

    BitMatrix p2 = closed_neighborhood_matrix(Graph::path(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) CHECK(p2.get(i, k));

    BitMatrix k3 = closed_neighborhood_matrix(Graph::complete(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) CHECK(k3.get(i, k));
}

TEST_CASE("symmetry and all-ones diagonal on random graphs") {
    for (const Graph& g : testsupport::random_corpus(30, 12, 11)) {
        BitMatrix n = closed_neighborhood_matrix(g);
        for (std::size_t i = 0; i < n.rows(); ++i) {
            CHECK(n.get(i, i));
            for (std::size_t k = 0; k < i; ++k) CHECK(n.get(i, k) == n.get(k, i));
        }
    }
}

TEST_CASE("vertex and edge deletion") {
    VertexDeletion d = delete_vertex(Graph::path(3), 1);
    CHECK(d.graph.vertex_count() == 2);
    CHECK(d.graph.edge_count() == 0);
    CHECK(d.old_to_new == std::vector<std::ptrdiff_t>{0, -1, 1});

    CHECK(delete_edge(Graph::cycle(3), Edge(0, 1)).edge_count() == 2);
    CHECK(delete_vertex(Graph(1, {}), 0).graph.vertex_count() == 0);

    CHECK_THROWS_AS(delete_vertex(Graph::path(3), 3), contract_violation);
    CHECK_THROWS_AS(delete_edge(Graph::path(3), Edge(0, 2)), contract_violation);
}

TEST_CASE("join constructions") {
    JoinResult p2 = join(Graph(1, {}), 0, Graph(1, {}), 0);
    CHECK(p2.graph == Graph::path(2));
    CHECK(p2.u == 0);
    CHECK(p2.w == 1);

    CHECK(join(Graph::path(3), 2, Graph(1, {}), 0).graph == Graph::path(4));
    CHECK(join(Graph::path(3), 2, Graph::path(3), 0).graph == Graph::path(6));
    CHECK_THROWS_AS(join(Graph(0, {}), 0, Graph(1, {}), 0), contract_violation);

    Join3Result p3 = join3(Graph(1, {}), 0, Graph(1, {}), 0, Graph(1, {}), 0);
    CHECK(p3.graph.vertex_count() == 3);
    CHECK(p3.graph.degree(p3.y) == 2);

    // P2 endpoint joined on both sides: 4 vertices, 3 edges, middle degree 3
    Join3Result t = join3(Graph(1, {}), 0, Graph::path(2), 0, Graph(1, {}), 0);
    CHECK(t.graph.vertex_count() == 4);
    CHECK(t.graph.edge_count() == 3);
    CHECK(t.graph.degree(t.y) == 3);

    CHECK(join3(Graph::path(3), 2, Graph(1, {}), 0, Graph::path(3), 0).graph ==
          Graph::path(7));
}

TEST_CASE("join then deleting the new edge recovers the disjoint union") {
    for (const Graph& g1 : testsupport::random_corpus(10, 6, 21)) {
        for (const Graph& g2 : testsupport::random_corpus(5, 6, 22)) {
            JoinResult h = join(g1, 0, g2, 0);
            Graph back = delete_edge(h.graph, Edge(h.u, h.w));
            CHECK(back.edge_count() == g1.edge_count() + g2.edge_count());
            Graph offset_part = induced_subgraph(back, [&] {
                std::vector<std::size_t> v;
                for (std::size_t i = g1.vertex_count(); i < back.vertex_count(); ++i)
                    v.push_back(i);
                return v;
            }());
            CHECK(offset_part == g2);
        }
    }
}

TEST_CASE("components, trees, cut edges") {
    auto comps = components(delete_vertex(Graph::path(3), 1).graph);
    CHECK(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<std::size_t>{0});

    CHECK_FALSE(is_tree(Graph::cycle(6)));
    CHECK(is_tree(Graph(1, {})));
    CHECK_FALSE(is_tree(Graph(0, {})));

    for (const Edge& e : Graph::path(5).edges()) CHECK(is_cut_edge(Graph::path(5), e));
    for (const Edge& e : Graph::cycle(4).edges())
        CHECK_FALSE(is_cut_edge(Graph::cycle(4), e));
}

TEST_CASE("cut edge agrees with component recount on random graphs") {
    for (const Graph& g : testsupport::random_corpus(40, 12, 31)) {
        for (const Edge& e : g.edges()) {
            bool recount = components(delete_edge(g, e)).size() > components(g).size();
            CHECK(is_cut_edge(g, e) == recount);
        }
    }
}

TEST_CASE("random tree generator") {
    CHECK(random_tree(1, 5) == Graph(1, {}));
    CHECK_THROWS_AS(random_tree(0, 1), contract_violation);
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        for (std::size_t n = 1; n <= 64; n += 7) CHECK(is_tree(random_tree(n, seed)));
    // determinism
    CHECK(random_tree(20, 42) == random_tree(20, 42));
}

TEST_CASE("random graph generator") {
    CHECK(random_graph(5, 0.0, 3).edge_count() == 0);
    CHECK(random_graph(5, 1.0, 3).edge_count() == 10);
    CHECK(random_graph(8, 0.4, 9) == random_graph(8, 0.4, 9));
    CHECK_THROWS_AS(random_graph(3, 1.5, 0), contract_violation);
}

TEST_CASE("tree generator covers the labeled trees uniformly enough") {
    // n = 4: 16 labeled trees; a few thousand draws should hit all of them
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 2000; ++seed)
        seen.insert(random_tree(4, seed).edges());
    CHECK(seen.size() == 16);
}

TEST_CASE("edge list round trip and parse errors") {
    for (const Graph& g : testsupport::random_corpus(20, 10, 41)) {
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        CHECK(read_edge_list(in) == g);
    }

    std::istringstream commented("# a path\n3\n0 1\n\n1 2 # tail\n");
    CHECK(read_edge_list(commented) == Graph::path(3));

    std::istringstream empty_graph("0\n");
    CHECK(read_edge_list(empty_graph) == Graph(0, {}));

    std::istringstream bad1("3\n0\n");
    CHECK_THROWS_AS(read_edge_list(bad1), contract_violation);
    std::istringstream bad2("3\n0 7\n");
    CHECK_THROWS_AS(read_edge_list(bad2), contract_violation);
    std::istringstream bad3("");
    CHECK_THROWS_AS(read_edge_list(bad3), contract_violation);
    std::istringstream bad4("3\n0 1 2\n");
    CHECK_THROWS_AS(read_edge_list(bad4), contract_violation);
}
