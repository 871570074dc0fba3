#include "lightsout/structure.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace lightsout {

namespace {

// Builds the subgraph on the given original labels (ascending) from an
// explicit edge set; local index i corresponds to vertices[i].
Graph relabel(const std::vector<std::size_t>& vertices, const std::vector<Edge>& edges) {
    std::vector<Edge> local;
    local.reserve(edges.size());
    for (const Edge& e : edges) {
        auto iu = std::lower_bound(vertices.begin(), vertices.end(), e.u);
        auto iw = std::lower_bound(vertices.begin(), vertices.end(), e.w);
        if (iu == vertices.end() || *iu != e.u || iw == vertices.end() || *iw != e.w)
            throw contract_violation("relabel: edge endpoint not in vertex set");
        local.emplace_back(static_cast<std::size_t>(iu - vertices.begin()),
                           static_cast<std::size_t>(iw - vertices.begin()));
    }
    return Graph(vertices.size(), std::move(local));
}

std::size_t local_index(const std::vector<std::size_t>& vertices, std::size_t orig) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), orig);
    require(it != vertices.end() && *it == orig, "vertex not in subgraph");
    return static_cast<std::size_t>(it - vertices.begin());
}

} // namespace

ChainCertificate build_chain(const Graph& g) {
    require(g.vertex_count() >= 1, "build_chain: graph must be nonempty");
    ChainCertificate cert;
    Graph cur = g;
    std::vector<std::size_t> orig(g.vertex_count());
    for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = i;

    std::size_t nu0 = nullity(g);
    cert.expected_nullities.push_back(nu0);
    while (cur.vertex_count() > 0) {
        std::size_t pick = cur.vertex_count();
        if (nullity(cur) > 0) {
            for (std::size_t v = 0; v < cur.vertex_count(); ++v)
                if (is_half_activated(cur, v)) { pick = v; break; }
        } else {
            std::vector<Activation> act = activation_vector(cur);
            for (std::size_t v = 0; v < cur.vertex_count(); ++v)
                if (act[v] == Activation::always) { pick = v; break; }
        }
        if (pick == cur.vertex_count())
            throw invariant_violation(
                "build_chain: no removable vertex of the required class found");
        cert.removal_order.push_back(orig[pick]);
        cur = delete_vertex(cur, pick).graph;
        orig.erase(orig.begin() + static_cast<std::ptrdiff_t>(pick));
        cert.expected_nullities.push_back(nullity(cur));
    }
    // The realized schedule must match the closed form.
    for (std::size_t k = 0; k <= g.vertex_count(); ++k) {
        std::size_t want = k < nu0 ? nu0 - k : 0;
        if (cert.expected_nullities[k] != want)
            throw invariant_violation("build_chain: nullity schedule deviates at step " +
                                      std::to_string(k));
    }
    return cert;
}

VerifyResult verify_chain(const Graph& g, const ChainCertificate& cert) {
    std::size_t n = g.vertex_count();
    if (cert.removal_order.size() != n)
        return VerifyResult::fail("removal order length differs from vertex count");
    if (cert.expected_nullities.size() != n + 1)
        return VerifyResult::fail("expected nullity list must have length n + 1");
    std::vector<bool> seen(n, false);
    for (std::size_t v : cert.removal_order) {
        if (v >= n || seen[v]) return VerifyResult::fail("removal order is not a permutation");
        seen[v] = true;
    }
    std::size_t nu0 = nullity(g);
    Graph cur = g;
    std::vector<std::ptrdiff_t> orig_to_cur(n);
    for (std::size_t i = 0; i < n; ++i) orig_to_cur[i] = static_cast<std::ptrdiff_t>(i);
    for (std::size_t k = 0; k <= n; ++k) {
        std::size_t schedule = k < nu0 ? nu0 - k : 0;
        std::size_t measured = nullity(cur);
        if (cert.expected_nullities[k] != schedule)
            return VerifyResult::fail("certificate nullity at step " + std::to_string(k) +
                                      " deviates from the schedule");
        if (measured != schedule)
            return VerifyResult::fail("recomputed nullity at step " + std::to_string(k) +
                                      " deviates from the schedule");
        if (k == n) break;
        std::ptrdiff_t cur_label = orig_to_cur[cert.removal_order[k]];
        if (cur_label < 0) return VerifyResult::fail("vertex removed twice");
        VertexDeletion del = delete_vertex(cur, static_cast<std::size_t>(cur_label));
        cur = del.graph;
        for (std::size_t i = 0; i < n; ++i)
            if (orig_to_cur[i] >= 0)
                orig_to_cur[i] = del.old_to_new[static_cast<std::size_t>(orig_to_cur[i])];
    }
    return VerifyResult::pass();
}

int predicted_delta_nu(int a, int b) {
    return (a == -1 && b == -1) ? -2 : a * b;
}

int predicted_post_activation(int a, int b) {
    int m = ((a * (1 + b)) % 3 + 3) % 3;
    return m == 2 ? -1 : m;
}

JoinReport join_report(const Graph& g1, std::size_t u, const Graph& g2, std::size_t w) {
    require(g1.vertex_count() > 0 && g2.vertex_count() > 0,
            "join_report: operands must be nonempty");
    JoinReport rep;
    rep.a = to_int(activation_number(g1, u));
    rep.b = to_int(activation_number(g2, w));
    JoinResult h = join(g1, u, g2, w);
    rep.delta_nu = static_cast<int>(nullity(h.graph)) - static_cast<int>(nullity(g1)) -
                   static_cast<int>(nullity(g2));
    std::vector<Activation> act = activation_vector(h.graph);
    rep.post_u = to_int(act[h.u]);
    rep.post_w = to_int(act[h.w]);
    rep.table_row_ok = rep.delta_nu == predicted_delta_nu(rep.a, rep.b) &&
                       rep.post_u == predicted_post_activation(rep.a, rep.b) &&
                       rep.post_w == predicted_post_activation(rep.b, rep.a);
    return rep;
}

StarJoinCheck star_join_check(const Graph& f, std::size_t u,
                              const std::vector<std::pair<Graph, std::size_t>>& attachments) {
    require(is_always_solvable(f), "star_join_check: center graph must be always solvable");
    int a_center = to_int(activation_number(f, u));
    std::size_t ones = 0;
    for (const auto& [gi, vi] : attachments) {
        require(is_always_solvable(gi), "star_join_check: attachment must be always solvable");
        if (activation_number(gi, vi) == Activation::always) ++ones;
    }
    Graph h = f;
    for (const auto& [gi, vi] : attachments) h = join(h, u, gi, vi).graph;
    bool predicted = a_center == 0 || ones % 2 == 0;
    return StarJoinCheck{h, predicted, is_always_solvable(h)};
}

PassCertificate min_pass_tree(const Graph& t) {
    require(is_tree(t), "min_pass_tree: input must be a tree");
    std::size_t target = nullity(t) + 1;
    Graph cur = t;
    for (;;) {
        // half[v]: v is half-activated within its current component
        std::vector<bool> half(t.vertex_count(), false);
        for (const Component& c : components(cur)) {
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                if (is_half_activated(c.graph, i)) half[c.vertices[i]] = true;
        }
        const Edge* cut = nullptr;
        for (const Edge& e : cur.edges())
            if (half[e.u] && half[e.w]) { cut = &e; break; }
        if (!cut) break;
        cur = delete_edge(cur, *cut);
    }
    PassCertificate cert;
    for (const Component& c : components(cur)) cert.blocks.push_back(c.vertices);
    if (cert.blocks.size() != target)
        throw invariant_violation("min_pass_tree: ended with " +
                                  std::to_string(cert.blocks.size()) + " blocks, expected " +
                                  std::to_string(target));
    return cert;
}

VerifyResult verify_pass(const Graph& g, const PassCertificate& cert, bool claim_minimal) {
    std::size_t n = g.vertex_count();
    if (n == 0) return VerifyResult::fail("the empty graph has no partition");
    std::vector<bool> seen(n, false);
    for (const auto& block : cert.blocks) {
        if (block.empty()) return VerifyResult::fail("empty block");
        for (std::size_t v : block) {
            if (v >= n || seen[v])
                return VerifyResult::fail("blocks do not partition the vertex set");
            seen[v] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        return VerifyResult::fail("blocks do not cover every vertex");
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
        std::vector<std::size_t> block = cert.blocks[i];
        std::sort(block.begin(), block.end());
        Graph sub = induced_subgraph(g, block);
        if (!is_connected(sub))
            return VerifyResult::fail("block " + std::to_string(i) +
                                      " does not induce a connected subgraph");
        if (!is_always_solvable(sub))
            return VerifyResult::fail("block " + std::to_string(i) +
                                      " does not induce an always solvable subgraph");
    }
    if (claim_minimal) {
        std::size_t want = is_tree(g) ? nullity(g) + 1 : pi_exact(g);
        if (cert.blocks.size() != want)
            return VerifyResult::fail("block count " + std::to_string(cert.blocks.size()) +
                                      " is not minimal (expected " + std::to_string(want) + ")");
    }
    return VerifyResult::pass();
}

std::size_t pi_exact(const Graph& g) {
    std::size_t n = g.vertex_count();
    require(n >= 1, "pi_exact: graph must be nonempty");
    if (n > 10) throw unsupported_size("pi_exact: supported only up to 10 vertices");

    // Memoized block validity (connected and always solvable), keyed by vertex mask.
    std::vector<signed char> memo(std::size_t{1} << n, -1);
    auto block_ok = [&](std::uint32_t mask) {
        if (memo[mask] >= 0) return memo[mask] != 0;
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1u) verts.push_back(v);
        Graph sub = induced_subgraph(g, verts);
        bool ok = is_connected(sub) && is_always_solvable(sub);
        memo[mask] = ok ? 1 : 0;
        return ok;
    };

    std::size_t best = n; // all singletons always work
    std::vector<std::uint32_t> blocks;
    // Branch and bound over assignments of vertex v to an existing or new block.
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
        if (blocks.size() >= best) return;
        if (v == n) {
            for (std::uint32_t mask : blocks)
                if (!block_ok(mask)) return;
            best = blocks.size();
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i] |= std::uint32_t{1} << v;
            dfs(v + 1);
            blocks[i] &= ~(std::uint32_t{1} << v);
        }
        blocks.push_back(std::uint32_t{1} << v);
        dfs(v + 1);
        blocks.pop_back();
    };
    dfs(0);
    return best;
}

namespace {

using Cert = DecompositionCertificate;

Cert::NodePtr decompose_rec(const Graph& g, const std::vector<std::size_t>& orig) {
    if (g.vertex_count() == 1)
        return std::make_shared<Cert::Node>(Cert::Node{Cert::Leaf{orig[0]}});

    std::vector<Activation> act = activation_vector(g);
    const Edge* pick = nullptr;
    std::size_t u = 0, w = 0; // u has activation 0, w has activation 1
    for (const Edge& e : g.edges()) {
        if (act[e.u] == Activation::never && act[e.w] == Activation::always) {
            pick = &e; u = e.u; w = e.w; break;
        }
        if (act[e.u] == Activation::always && act[e.w] == Activation::never) {
            pick = &e; u = e.w; w = e.u; break;
        }
    }
    if (!pick)
        throw invariant_violation("decompose_tree: no (0,1) adjacent pair in an "
                                  "always solvable tree");
    Graph cut = delete_edge(g, *pick);
    std::vector<Component> comps = components(cut);
    const Component* cu = nullptr;
    const Component* cs = nullptr;
    for (const Component& c : comps) {
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), u)) cu = &c;
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), w)) cs = &c;
    }
    auto lift = [&](const Component& c) {
        std::vector<std::size_t> out(c.vertices.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = orig[c.vertices[i]];
        return out;
    };
    std::vector<std::size_t> orig_u = lift(*cu);
    std::vector<std::size_t> orig_s = lift(*cs);

    if (is_always_solvable(cs->graph)) {
        // Type-(0,1): both sides always solvable.
        return std::make_shared<Cert::Node>(Cert::Node{Cert::Join01{
            decompose_rec(cu->graph, orig_u), orig[u], orig[w],
            decompose_rec(cs->graph, orig_s)}});
    }
    // Type-(1,-1): the w-side has nullity 1 and a half-activated vertex
    // adjacent to w; cutting there yields a Type-(1,1) split.
    std::size_t w_local = local_index(cs->vertices, w);
    std::size_t z_local = cs->vertices.size();
    for (std::size_t nb : cs->graph.neighbors(w_local))
        if (is_half_activated(cs->graph, nb)) { z_local = nb; break; }
    if (z_local == cs->vertices.size())
        throw invariant_violation("decompose_tree: no half-activated neighbour in the "
                                  "nullity-1 side");
    Graph cut2 = delete_edge(cs->graph, Edge(w_local, z_local));
    const Component* cw = nullptr;
    const Component* cz = nullptr;
    std::vector<Component> comps2 = components(cut2);
    for (const Component& c : comps2) {
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), w_local)) cw = &c;
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), z_local)) cz = &c;
    }
    auto lift2 = [&](const Component& c) {
        std::vector<std::size_t> out(c.vertices.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = orig_s[c.vertices[i]];
        return out;
    };
    std::vector<std::size_t> orig_w = lift2(*cw);
    std::vector<std::size_t> orig_z = lift2(*cz);
    return std::make_shared<Cert::Node>(Cert::Node{Cert::Join111{
        decompose_rec(cu->graph, orig_u), orig[u],
        decompose_rec(cw->graph, orig_w), orig[w],
        decompose_rec(cz->graph, orig_z), orig_s[z_local]}});
}

} // namespace

DecompositionCertificate decompose_tree(const Graph& t) {
    require(is_tree(t), "decompose_tree: input must be a tree");
    require(is_always_solvable(t), "decompose_tree: input must be always solvable");
    std::vector<std::size_t> orig(t.vertex_count());
    for (std::size_t i = 0; i < orig.size(); ++i) orig[i] = i;
    return DecompositionCertificate{decompose_rec(t, orig)};
}

namespace {

struct Collected {
    std::vector<std::size_t> vertices; // sorted original labels
    std::vector<Edge> edges;           // original labels
};

// Rebuilds the subtree below a node and checks the declared type constraints
// with activation numbers recomputed from scratch.
Collected collect_and_check(const Cert::NodePtr& node) {
    if (!node) throw contract_violation("null node");
    if (const auto* leaf = std::get_if<Cert::Leaf>(&node->value))
        return Collected{{leaf->vertex}, {}};

    auto merge = [](std::vector<Collected> parts, std::vector<Edge> joins) {
        Collected out;
        for (auto& p : parts) {
            for (std::size_t v : p.vertices) out.vertices.push_back(v);
            for (const Edge& e : p.edges) out.edges.push_back(e);
        }
        std::sort(out.vertices.begin(), out.vertices.end());
        if (std::adjacent_find(out.vertices.begin(), out.vertices.end()) !=
            out.vertices.end())
            throw contract_violation("child subtrees share a vertex");
        for (const Edge& e : joins) out.edges.push_back(e);
        return out;
    };
    auto check_child = [](const Collected& c, std::size_t vertex, Activation want) {
        Graph sub = relabel(c.vertices, c.edges);
        if (!is_tree(sub)) throw contract_violation("child is not a tree");
        if (!is_always_solvable(sub))
            throw contract_violation("child is not always solvable");
        if (activation_number(sub, local_index(c.vertices, vertex)) != want)
            throw contract_violation("join vertex has the wrong activation number");
    };

    if (const auto* j = std::get_if<Cert::Join01>(&node->value)) {
        Collected l = collect_and_check(j->left);
        Collected r = collect_and_check(j->right);
        check_child(l, j->u, Activation::never);
        check_child(r, j->w, Activation::always);
        return merge({std::move(l), std::move(r)}, {Edge(j->u, j->w)});
    }
    const auto& j = std::get<Cert::Join111>(node->value);
    Collected f = collect_and_check(j.first);
    Collected m = collect_and_check(j.middle);
    Collected l = collect_and_check(j.last);
    check_child(f, j.x, Activation::always);
    check_child(m, j.y, Activation::always);
    check_child(l, j.z, Activation::always);
    return merge({std::move(f), std::move(m), std::move(l)},
                 {Edge(j.x, j.y), Edge(j.y, j.z)});
}

} // namespace

VerifyResult verify_decomposition(const Graph& t, const DecompositionCertificate& cert) {
    try {
        Collected c = collect_and_check(cert.root);
        if (c.vertices.size() != t.vertex_count())
            return VerifyResult::fail("certificate covers a different vertex count");
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            if (c.vertices[i] != i)
                return VerifyResult::fail("certificate vertex labels do not match the tree");
        std::vector<Edge> edges = c.edges;
        std::sort(edges.begin(), edges.end());
        if (edges != t.edges())
            return VerifyResult::fail("recombined edge set differs from the tree");
        return VerifyResult::pass();
    } catch (const contract_violation& e) {
        return VerifyResult::fail(e.what());
    }
}

namespace {

// Known small graphs per activation class, used when random sampling misses.
std::pair<Graph, std::size_t> class_fallback(int cls) {
    switch (cls) {
        case 1: return {Graph(1, {}), 0};                   // K1, must push
        case 0: return {Graph::path(3), 0};                 // P3 endpoint
        default: return {Graph(2, {Edge(0, 1)}), 0};        // P2, half-activated
    }
}

std::pair<Graph, std::size_t> sample_with_class(std::mt19937_64& rng, std::size_t max_size,
                                                int cls) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_real_distribution<double> p_dist(0.15, 0.85);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::size_t n = size_dist(rng);
        Graph g = random_graph(n, p_dist(rng), rng());
        std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        if (to_int(activation_number(g, v)) == cls) return {std::move(g), v};
    }
    return class_fallback(cls);
}

} // namespace

TableCheckSummary run_table_check(std::size_t trials, std::size_t max_size,
                                  std::uint64_t seed) {
    require(trials >= 1, "run_table_check: need at least one trial");
    require(max_size >= 1, "run_table_check: need a positive operand size");
    static constexpr std::pair<int, int> kRows[6] = {
        {0, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, -1}};
    TableCheckSummary sum;
    sum.trials = trials;
    for (const auto& row : kRows) sum.row_hits.push_back({row, 0});
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto [a, b] = kRows[t % 6];
        auto [g1, u] = sample_with_class(rng, max_size, a);
        auto [g2, w] = sample_with_class(rng, max_size, b);
        JoinReport rep = join_report(g1, u, g2, w);
        if (!rep.table_row_ok) ++sum.violations;
        std::pair<int, int> observed{rep.a, rep.b};
        for (auto& [row, hits] : sum.row_hits)
            if (observed == row ||
                (std::pair<int, int>{observed.second, observed.first} == row)) {
                ++hits;
                break;
            }
    }
    return sum;
}

} // namespace lightsout
