#pragma once

#include <utility>
#include <vector>

#include "lightsout/structure.hpp"

namespace lightsout::oracle {

/// Per-vertex activation counts over all solving patterns of the all-ones
/// configuration. Each count is 0, total/2, or total.
struct ActivationStats {
    std::vector<std::size_t> activated;
    std::size_t total = 0;
};

/// All patterns p with N(G)p = c, found by sweeping every 2^n pattern.
/// Ordered ascending by integer encoding (vertex 0 = least significant bit).
/// Hard guard: n <= 20.
std::vector<BitVec> enumerate_solutions(const Graph& g, const BitVec& c);

/// Counts activation per vertex over enumerate_solutions(G, all-ones).
ActivationStats activation_stats(const Graph& g);

/// Exact minimum PASS cardinality by sweeping every set partition of V
/// (restricted growth strings); the witness is the first minimizer found.
/// Hard guard: n <= 10.
std::pair<std::size_t, PassCertificate> pi_partition_oracle(const Graph& g);

} // namespace lightsout::oracle
