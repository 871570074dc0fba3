#pragma once

#include <vector>

#include "lightsout/solver.hpp"

namespace lightsout {

/// Per-vertex activation class: half-activated vertices appear in exactly
/// half of the all-ones solving patterns, fixed ones in all or none.
enum class Activation : int {
    half = -1,
    never = 0,
    always = 1,
};

inline int to_int(Activation a) { return static_cast<int>(a); }
Activation activation_from_int(int v);

struct VertexProfile {
    std::size_t vertex;
    Activation activation;
    int null_difference; // always in {-1, 0, 1}
    bool fixed;
};

/// Configuration with only vertex v on.
BitVec config_single(std::size_t n, std::size_t v);
/// Inverse of config_single: all vertices on except v.
BitVec config_all_but(std::size_t n, std::size_t v);

/// True iff some kernel basis vector (hence some null pattern) has bit v set.
bool is_half_activated(const Graph& g, std::size_t v);

/// Equivalent to c_v being solvable, and to v not being half-activated.
bool is_fixed(const Graph& g, std::size_t v);

Activation activation_number(const Graph& g, std::size_t v);

/// Batch form computed from a single elimination pass.
std::vector<Activation> activation_vector(const Graph& g);

/// nd(v) = nullity(G - v) - nullity(G).
int null_difference(const Graph& g, std::size_t v);

/// Assembles activation, null difference, and fixedness per vertex and checks
/// the activation/null-difference correspondence (A=1 <=> nd=0, A=0 <=> nd=1,
/// A=-1 <=> nd=-1); a mismatch throws invariant_violation.
std::vector<VertexProfile> profile(const Graph& g);

} // namespace lightsout
