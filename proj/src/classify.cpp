#include "lightsout/classify.hpp"

#include <sstream>

namespace lightsout {

Activation activation_from_int(int v) {
    require(v >= -1 && v <= 1, "activation_from_int: value must be -1, 0, or 1");
    return static_cast<Activation>(v);
}

BitVec config_single(std::size_t n, std::size_t v) { return BitVec::unit(n, v); }

BitVec config_all_but(std::size_t n, std::size_t v) {
    return BitVec::ones(n) ^ BitVec::unit(n, v);
}

bool is_half_activated(const Graph& g, std::size_t v) {
    require(v < g.vertex_count(), "is_half_activated: vertex out of range");
    for (const BitVec& l : null_patterns(g))
        if (l.get(v)) return true;
    return false;
}

bool is_fixed(const Graph& g, std::size_t v) {
    require(v < g.vertex_count(), "is_fixed: vertex out of range");
    return !is_half_activated(g, v);
}

Activation activation_number(const Graph& g, std::size_t v) {
    require(v < g.vertex_count(), "activation_number: vertex out of range");
    return activation_vector(g)[v];
}

std::vector<Activation> activation_vector(const Graph& g) {
    require(g.vertex_count() >= 1, "activation_vector: graph must be nonempty");
    SolutionSet s = solve_all_ones(g);
    std::vector<Activation> out(g.vertex_count(), Activation::never);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        bool half = false;
        for (const BitVec& l : s.kernel_basis)
            if (l.get(v)) { half = true; break; }
        if (half)
            out[v] = Activation::half;
        else
            out[v] = s.particular.get(v) ? Activation::always : Activation::never;
    }
    return out;
}

int null_difference(const Graph& g, std::size_t v) {
    require(v < g.vertex_count(), "null_difference: vertex out of range");
    std::size_t before = nullity(g);
    std::size_t after = nullity(delete_vertex(g, v).graph);
    return static_cast<int>(after) - static_cast<int>(before);
}

std::vector<VertexProfile> profile(const Graph& g) {
    require(g.vertex_count() >= 1, "profile: graph must be nonempty");
    std::vector<Activation> act = activation_vector(g);
    std::vector<VertexProfile> out;
    out.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int nd = null_difference(g, v);
        int expected_nd = act[v] == Activation::always ? 0
                        : act[v] == Activation::never  ? 1
                                                       : -1;
        if (nd != expected_nd) {
            std::ostringstream msg;
            msg << "profile: activation/null-difference correspondence failed at vertex "
                << v << " (activation " << to_int(act[v]) << ", nd " << nd
                << "); graph dump:\n";
            write_edge_list(g, msg);
            throw invariant_violation(msg.str());
        }
        out.push_back(VertexProfile{v, act[v], nd, act[v] != Activation::half});
    }
    return out;
}

} // namespace lightsout
