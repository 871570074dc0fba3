#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lightsout/errors.hpp"

namespace lightsout {

/// Length-n vector over GF(2), packed into 64-bit words.
/// Coordinate i is addressed by vertex index i; bits beyond size() are zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    static BitVec ones(std::size_t len);
    static BitVec unit(std::size_t len, std::size_t i);
    // Parses "0101..." where the first character is coordinate 0.
    static BitVec from_string(std::string_view s);
    // Decodes an integer encoding with coordinate 0 as the least significant bit.
    static BitVec from_bits(std::size_t len, std::uint64_t bits);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    // Parity of the coordinatewise AND.
    bool dot(const BitVec& o) const;

    bool any() const;
    std::size_t count() const;

    bool operator==(const BitVec&) const = default;

    std::string to_string() const;
    // Integer encoding, coordinate 0 = least significant bit. Requires size() <= 64.
    std::uint64_t to_bits() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major GF(2) matrix; each row is a BitVec of length cols().
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }

    BitVec mul(const BitVec& x) const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMatrix R;
    std::vector<std::size_t> pivot_cols; // strictly increasing
    std::size_t rank = 0;
};

/// Reduced row echelon form over GF(2); row space is preserved.
RrefResult rref(const BitMatrix& m);

/// Solves Mx = b. Returns the canonical particular solution (free variables 0),
/// or nullopt when b is not in the column space.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b);

/// Deterministic kernel basis: one vector per free column, free columns in
/// ascending index, each vector with that free variable 1 and other frees 0.
std::vector<BitVec> nullspace_basis(const BitMatrix& m);

} // namespace lightsout
