#include "lightsout/oracle.hpp"

#include <algorithm>
#include <bit>

namespace lightsout::oracle {

std::vector<BitVec> enumerate_solutions(const Graph& g, const BitVec& c) {
    std::size_t n = g.vertex_count();
    if (n > 20) throw unsupported_size("enumerate_solutions: supported only up to 20 vertices");
    require(c.size() == n, "enumerate_solutions: configuration length mismatch");

    // Column masks of N(G); applying pattern bit v toggles cols[v].
    std::vector<std::uint32_t> cols(n, 0);
    for (std::size_t v = 0; v < n; ++v) cols[v] = std::uint32_t{1} << v;
    for (const Edge& e : g.edges()) {
        cols[e.u] |= std::uint32_t{1} << e.w;
        cols[e.w] |= std::uint32_t{1} << e.u;
    }
    std::uint32_t target = static_cast<std::uint32_t>(c.to_bits());

    std::vector<std::uint32_t> hits;
    std::uint32_t state = 0; // N * gray(k), updated one flipped bit at a time
    if (state == target) hits.push_back(0);
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        std::size_t flipped = static_cast<std::size_t>(std::countr_zero(k));
        state ^= cols[flipped];
        if (state == target)
            hits.push_back(static_cast<std::uint32_t>(k ^ (k >> 1)));
    }
    std::sort(hits.begin(), hits.end());
    std::vector<BitVec> out;
    out.reserve(hits.size());
    for (std::uint32_t h : hits) out.push_back(BitVec::from_bits(n, h));
    return out;
}

ActivationStats activation_stats(const Graph& g) {
    std::size_t n = g.vertex_count();
    require(n >= 1, "activation_stats: graph must be nonempty");
    std::vector<BitVec> sols = enumerate_solutions(g, BitVec::ones(n));
    ActivationStats st;
    st.total = sols.size();
    st.activated.assign(n, 0);
    for (const BitVec& p : sols)
        for (std::size_t v = 0; v < n; ++v)
            if (p.get(v)) ++st.activated[v];
    return st;
}

std::pair<std::size_t, PassCertificate> pi_partition_oracle(const Graph& g) {
    std::size_t n = g.vertex_count();
    require(n >= 1, "pi_partition_oracle: graph must be nonempty");
    if (n > 10) throw unsupported_size("pi_partition_oracle: supported only up to 10 vertices");

    std::size_t best = n + 1;
    std::vector<std::size_t> best_rgs;
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1.
    std::vector<std::size_t> rgs(n, 0);
    bool done = false;
    while (!done) {
        std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks < best) {
            bool ok = true;
            for (std::size_t b = 0; b < blocks && ok; ++b) {
                std::vector<std::size_t> verts;
                for (std::size_t v = 0; v < n; ++v)
                    if (rgs[v] == b) verts.push_back(v);
                Graph sub = induced_subgraph(g, verts);
                ok = is_connected(sub) && is_always_solvable(sub);
            }
            if (ok) {
                best = blocks;
                best_rgs = rgs;
            }
        }
        // advance to the next restricted growth string
        done = true;
        for (std::size_t i = n; i-- > 1;) {
            std::size_t cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                done = false;
                break;
            }
        }
    }
    PassCertificate cert;
    cert.blocks.assign(best, {});
    if (best_rgs.empty()) best_rgs.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) cert.blocks[best_rgs[v]].push_back(v);
    return {best, cert};
}

} // namespace lightsout::oracle
