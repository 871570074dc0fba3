#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lightsout/classify.hpp"

namespace lightsout {

/// Outcome of an independent certificate check.
struct VerifyResult {
    bool ok = false;
    std::string reason; // empty on success

    explicit operator bool() const { return ok; }

    static VerifyResult pass() { return VerifyResult{true, {}}; }
    static VerifyResult fail(std::string why) { return VerifyResult{false, std::move(why)}; }
};

/// Vertex removal order realizing the nullity schedule
/// nu(G_k) = nu(G) - k for k < nu(G), then 0 down to the empty graph.
struct ChainCertificate {
    std::vector<std::size_t> removal_order; // original labels, length n
    std::vector<std::size_t> expected_nullities; // length n + 1
};

/// Observed behaviour of a single-edge join against the activation-number
/// join table and the compact delta-nu / post-activation formulas.
struct JoinReport {
    int a; // activation of u in G1
    int b; // activation of w in G2
    int delta_nu; // nu(H) - nu(G1) - nu(G2)
    int post_u; // activation of u in H
    int post_w; // activation of w in H
    bool table_row_ok;
};

/// What the join table predicts for a Type-(a,b) connection.
int predicted_delta_nu(int a, int b);
int predicted_post_activation(int a, int b); // activation of the 'a' endpoint in H

/// Partition of the vertex set whose blocks induce connected always-solvable
/// subgraphs.
struct PassCertificate {
    std::vector<std::vector<std::size_t>> blocks; // original labels
};

/// Recursive witness that a tree is built from always-solvable subtrees by
/// Type-(0,1) and Type-(1,1,1) connections.
struct DecompositionCertificate {
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Leaf {
        std::size_t vertex;
    };
    struct Join01 {
        NodePtr left;        // contains u, activation 0 there
        std::size_t u;
        std::size_t w;
        NodePtr right;       // contains w, activation 1 there
    };
    struct Join111 {
        NodePtr first;       // contains x
        std::size_t x;
        NodePtr middle;      // contains y; edges (x,y) and (y,z)
        std::size_t y;
        NodePtr last;        // contains z
        std::size_t z;
    };
    struct Node {
        std::variant<Leaf, Join01, Join111> value;
    };

    NodePtr root;
};

ChainCertificate build_chain(const Graph& g);
VerifyResult verify_chain(const Graph& g, const ChainCertificate& cert);

JoinReport join_report(const Graph& g1, std::size_t u, const Graph& g2, std::size_t w);

struct StarJoinCheck {
    Graph joined;
    bool predicted;
    bool observed;
};

/// Joins each attachment vertex to u by an edge; all operands must be always
/// solvable. predicted follows the star-join rule (A_F(u)=0 keeps the result
/// always solvable; A_F(u)=1 needs an even count of activation-1 attachments),
/// observed is measured on the joined graph.
StarJoinCheck star_join_check(const Graph& f, std::size_t u,
                              const std::vector<std::pair<Graph, std::size_t>>& attachments);

/// Minimal partition of a tree into always-solvable subtrees; the block count
/// is nullity(T) + 1.
PassCertificate min_pass_tree(const Graph& t);

/// Checks that blocks partition V and each block induces a connected
/// always-solvable subgraph.
/// With claim_minimal, trees are checked against nullity + 1 and other graphs
/// against pi_exact (so they fall under its size guard).
VerifyResult verify_pass(const Graph& g, const PassCertificate& cert, bool claim_minimal);

/// Minimum block count over all partitions into connected induced
/// always-solvable subgraphs. Guarded to n <= 10.
std::size_t pi_exact(const Graph& g);

DecompositionCertificate decompose_tree(const Graph& t);
VerifyResult verify_decomposition(const Graph& t, const DecompositionCertificate& cert);

struct TableCheckSummary {
    std::size_t trials = 0;
    std::size_t violations = 0;
    // hits per unordered type row, keyed by the six canonical (a,b) pairs
    // (0,0), (0,1), (0,-1), (1,1), (1,-1), (-1,-1)
    std::vector<std::pair<std::pair<int, int>, std::size_t>> row_hits;
};

/// Runs seeded random join trials, cycling through the six connection types so
/// every row gets exercised, and counts observations that contradict the join
/// table. Operand sizes stay <= max_size.
TableCheckSummary run_table_check(std::size_t trials, std::size_t max_size,
                                  std::uint64_t seed);

} // namespace lightsout
