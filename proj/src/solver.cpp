#include "lightsout/solver.hpp"

#include <sstream>

namespace lightsout {

std::vector<BitVec> SolutionSet::enumerate() const {
    if (kernel_basis.size() > 20)
        throw unsupported_size("SolutionSet::enumerate: kernel dimension exceeds 20");
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << kernel_basis.size());
    out.push_back(particular);
    for (const BitVec& b : kernel_basis) {
        std::size_t count = out.size();
        for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] ^ b);
    }
    return out;
}

std::size_t nullity(const Graph& g) {
    return nullspace_basis(closed_neighborhood_matrix(g)).size();
}

bool is_always_solvable(const Graph& g) { return nullity(g) == 0; }

std::vector<BitVec> null_patterns(const Graph& g) {
    return nullspace_basis(closed_neighborhood_matrix(g));
}

bool is_solvable(const Graph& g, const BitVec& c) {
    require(c.size() == g.vertex_count(), "is_solvable: configuration length mismatch");
    for (const BitVec& l : null_patterns(g))
        if (c.dot(l)) return false;
    return true;
}

std::optional<SolutionSet> solve_config(const Graph& g, const BitVec& c) {
    require(c.size() == g.vertex_count(), "solve_config: configuration length mismatch");
    BitMatrix n = closed_neighborhood_matrix(g);
    auto x = solve(n, c);
    if (!x) return std::nullopt;
    return SolutionSet{std::move(*x), nullspace_basis(n)};
}

SolutionSet solve_all_ones(const Graph& g) {
    require(g.vertex_count() >= 1, "solve_all_ones: graph must be nonempty");
    auto s = solve_config(g, BitVec::ones(g.vertex_count()));
    if (!s) {
        std::ostringstream msg;
        msg << "solve_all_ones: no solution found, which contradicts Sutner's theorem; "
               "graph dump:\n";
        write_edge_list(g, msg);
        throw invariant_violation(msg.str());
    }
    return std::move(*s);
}

BitVec apply_pattern(const Graph& g, const BitVec& c, const BitVec& p) {
    require(c.size() == g.vertex_count() && p.size() == g.vertex_count(),
            "apply_pattern: length mismatch");
    return closed_neighborhood_matrix(g).mul(p) ^ c;
}

BitVec transported_config(const Graph& g, const Edge& e, const BitVec& p) {
    require(g.has_edge(e.u, e.w), "transported_config: edge not present");
    require(p.size() == g.vertex_count(), "transported_config: pattern length mismatch");
    BitVec out = closed_neighborhood_matrix(g).mul(p);
    if (p.get(e.w)) out.flip(e.u);
    if (p.get(e.u)) out.flip(e.w);
    return out;
}

} // namespace lightsout
