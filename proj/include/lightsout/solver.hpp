#pragma once

#include <optional>
#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout {

/// Full solution set of one configuration: every solving pattern is
/// particular + a combination of kernel basis vectors; there are
/// 2^|kernel_basis| of them.
struct SolutionSet {
    BitVec particular;
    std::vector<BitVec> kernel_basis;

    /// All solutions explicitly, ascending by integer encoding.
    /// Guarded: throws unsupported_size when |kernel_basis| > 20.
    std::vector<BitVec> enumerate() const;
};

/// dim Ker N(G); the nullity of the empty graph is 0.
std::size_t nullity(const Graph& g);

/// True iff every configuration is solvable, i.e. nullity is 0.
bool is_always_solvable(const Graph& g);

/// Deterministic kernel basis of N(G).
std::vector<BitVec> null_patterns(const Graph& g);

/// True iff c is in the column space of N(G); checked as orthogonality
/// to every kernel basis vector.
bool is_solvable(const Graph& g, const BitVec& c);

std::optional<SolutionSet> solve_config(const Graph& g, const BitVec& c);

/// The all-ones configuration is solvable on every graph; an internal
/// failure here throws invariant_violation with a dump of G.
SolutionSet solve_all_ones(const Graph& g);

/// c + N(G) * p: the configuration left after applying pattern p to c.
BitVec apply_pattern(const Graph& g, const BitVec& c, const BitVec& p);

/// N(G-e) * p computed on G via the edge-deletion identity
/// N(G)p + p(w) c_u + p(u) c_w.
BitVec transported_config(const Graph& g, const Edge& e, const BitVec& p);

} // namespace lightsout
