#include "lightsout/gf2.hpp"

#include <bit>

namespace lightsout {

BitVec BitVec::ones(std::size_t len) {
    BitVec v(len);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    if (len % 64 != 0 && !v.words_.empty())
        v.words_.back() &= (std::uint64_t{1} << (len % 64)) - 1;
    return v;
}

BitVec BitVec::unit(std::size_t len, std::size_t i) {
    require(i < len, "BitVec::unit: index out of range");
    BitVec v(len);
    v.set(i, true);
    return v;
}

BitVec BitVec::from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw contract_violation("BitVec::from_string: expected only '0'/'1'");
    }
    return v;
}

BitVec BitVec::from_bits(std::size_t len, std::uint64_t bits) {
    require(len <= 64, "BitVec::from_bits: length exceeds 64");
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i)
        if ((bits >> i) & 1u) v.set(i, true);
    return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    require(len_ == o.len_, "BitVec: length mismatch in xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool BitVec::dot(const BitVec& o) const {
    require(len_ == o.len_, "BitVec: length mismatch in dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
    return std::popcount(acc) & 1;
}

bool BitVec::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::uint64_t BitVec::to_bits() const {
    require(len_ <= 64, "BitVec::to_bits: length exceeds 64");
    return words_.empty() ? 0 : words_[0];
}

BitVec BitMatrix::mul(const BitVec& x) const {
    require(x.size() == cols_, "BitMatrix::mul: dimension mismatch");
    BitVec y(rows());
    for (std::size_t r = 0; r < rows(); ++r)
        if (rows_[r].dot(x)) y.set(r, true);
    return y;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.R = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !res.R.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r) std::swap(res.R.row(pivot), res.R.row(r));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && res.R.get(i, c)) res.R.row(i) ^= res.R.row(r);
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
    require(b.size() == m.rows(), "solve: rhs length must equal row count");
    // Eliminate on the augmented matrix [M | b].
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        if (b.get(r)) aug.set(r, m.cols(), true);
    }
    RrefResult re = rref(aug);
    BitVec x(m.cols());
    for (std::size_t i = 0; i < re.pivot_cols.size(); ++i) {
        if (re.pivot_cols[i] == m.cols()) return std::nullopt; // inconsistent row
        if (re.R.get(i, m.cols())) x.set(re.pivot_cols[i], true);
    }
    return x;
}

std::vector<BitVec> nullspace_basis(const BitMatrix& m) {
    RrefResult re = rref(m);
    std::vector<BitVec> basis;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next_pivot < re.pivot_cols.size() && re.pivot_cols[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        BitVec v(m.cols());
        v.set(c, true);
        for (std::size_t i = 0; i < re.pivot_cols.size(); ++i)
            if (re.R.get(i, c)) v.set(re.pivot_cols[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace lightsout
