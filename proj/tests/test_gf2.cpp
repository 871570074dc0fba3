#include "doctest.h"

#include <random>

#include "lightsout/gf2.hpp"
#include "lightsout/graph.hpp"
#include "test_support.hpp"

using namespace lightsout;

namespace {

BitMatrix from_rows(const std::vector<std::string>& rows) {
    BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == '1') m.set(r, c, true);
    return m;
}

BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

// Brute-force kernel by sweeping every vector; independent of rref.
std::vector<BitVec> kernel_by_sweep(const BitMatrix& m) {
    REQUIRE(m.cols() <= 12);
    std::vector<BitVec> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m.cols()); ++bits) {
        BitVec v = BitVec::from_bits(m.cols(), bits);
        if (!m.mul(v).any()) out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("BitVec basics") {
    BitVec v = BitVec::from_string("0101");
    CHECK(v.size() == 4);
    CHECK_FALSE(v.get(0));
    CHECK(v.get(1));
    CHECK(v.to_string() == "0101");
    CHECK(v.count() == 2);
    CHECK(v.to_bits() == 0b1010);
    CHECK(BitVec::from_bits(4, 0b1010) == v);

    BitVec ones = BitVec::ones(70);
    CHECK(ones.count() == 70);
    CHECK((ones ^ ones).any() == false);

    CHECK(BitVec::from_string("110").dot(BitVec::from_string("011")));
    CHECK_FALSE(BitVec::from_string("110").dot(BitVec::from_string("111")));

    CHECK_THROWS_AS(BitVec::from_string("01x"), contract_violation);
    CHECK_THROWS_AS(BitVec::from_string("1").dot(BitVec::from_string("11")),
                    contract_violation);
}

TEST_CASE("rref on identity and rank-1 matrices") {
    auto r = rref(identity(3));
    CHECK(r.R == identity(3));
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.rank == 3);

    auto j = rref(from_rows({"111", "111", "111"}));
    CHECK(j.rank == 1);
    CHECK(j.R.row(0) == BitVec::from_string("111"));
    CHECK_FALSE(j.R.row(1).any());

    // N(P3) has full rank
    CHECK(rref(from_rows({"110", "111", "011"})).rank == 3);
}

TEST_CASE("solve: identity, P3, and an unsolvable P2 configuration") {
    BitVec b = BitVec::from_string("101");
    CHECK(solve(identity(3), b) == b);

    auto x = solve(from_rows({"110", "111", "011"}), BitVec::from_string("111"));
    REQUIRE(x.has_value());
    CHECK(x->to_string() == "010");

    CHECK_FALSE(solve(from_rows({"11", "11"}), BitVec::from_string("10")).has_value());
    CHECK_THROWS_AS(solve(identity(3), BitVec::from_string("10")), contract_violation);
}

TEST_CASE("nullspace basis examples") {
    CHECK(nullspace_basis(identity(4)).empty());

    auto p2 = nullspace_basis(from_rows({"11", "11"}));
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].to_string() == "11");

    auto k3 = nullspace_basis(from_rows({"111", "111", "111"}));
    REQUIRE(k3.size() == 2);
    CHECK(k3[0].to_string() == "110");
    CHECK(k3[1].to_string() == "101");
}

TEST_CASE("gf2 properties on random closed adjacency matrices") {
    std::mt19937_64 rng(20240817);
    for (const Graph& g : testsupport::random_corpus(60, 10, 99)) {
        BitMatrix n = closed_neighborhood_matrix(g);
        auto re = rref(n);
        auto basis = nullspace_basis(n);

        CHECK(re.rank + basis.size() == n.cols());
        CHECK(rref(re.R).R == re.R); // idempotence

        for (const BitVec& v : basis) CHECK_FALSE(n.mul(v).any());
        if (n.cols() <= 12)
            CHECK(kernel_by_sweep(n).size() == (std::size_t{1} << basis.size()));

        // random rhs: solve really solves, and for symmetric matrices
        // solvability matches orthogonality to the kernel basis
        for (int t = 0; t < 8; ++t) {
            BitVec b(n.rows());
            for (std::size_t i = 0; i < b.size(); ++i)
                if (rng() & 1) b.set(i, true);
            auto x = solve(n, b);
            bool orth = true;
            for (const BitVec& v : basis)
                if (b.dot(v)) orth = false;
            CHECK(x.has_value() == orth);
            if (x) CHECK(n.mul(*x) == b);
        }
    }
}

TEST_CASE("symmetric solvability cross-check over all rhs for small graphs") {
    for (const Graph& g : testsupport::random_corpus(20, 8, 7)) {
        BitMatrix n = closed_neighborhood_matrix(g);
        auto basis = nullspace_basis(n);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n.cols()); ++bits) {
            BitVec b = BitVec::from_bits(n.cols(), bits);
            bool orth = true;
            for (const BitVec& v : basis)
                if (b.dot(v)) orth = false;
            CHECK(solve(n, b).has_value() == orth);
        }
    }
}
