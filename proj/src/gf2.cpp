#include "ebw/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ebw::gf2 {

namespace {
std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
} // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(words_for(size), 0) {}

void BitVec::xor_with(const BitVec& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (std::uint64_t x : words_) w += std::popcount(x);
    return w;
}

bool BitVec::any() const {
    for (std::uint64_t x : words_)
        if (x) return true;
    return false;
}

void BitVec::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::vector<int> BitVec::support() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) out.push_back(static_cast<int>(i));
    return out;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)), bits_(rows * words_for(cols), 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows01) {
    if (rows01.empty() || rows01[0].empty())
        throw std::invalid_argument("matrix dimensions must be positive");
    BinaryMatrix m(rows01.size(), rows01[0].size());
    for (std::size_t r = 0; r < rows01.size(); ++r) {
        if (rows01[r].size() != m.cols_) throw std::invalid_argument("ragged row list");
        for (std::size_t c = 0; c < m.cols_; ++c)
            if (rows01[r][c]) m.set(r, c, true);
    }
    return m;
}

void BinaryMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = bits_.data() + dst * words_;
    const std::uint64_t* s = bits_.data() + src * words_;
    for (std::size_t i = 0; i < words_; ++i) d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = bits_.data() + a * words_;
    std::uint64_t* pb = bits_.data() + b * words_;
    for (std::size_t i = 0; i < words_; ++i) std::swap(pa[i], pb[i]);
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    const std::uint64_t* p = bits_.data() + r * words_;
    std::size_t w = 0;
    for (std::size_t i = 0; i < words_; ++i) w += std::popcount(p[i]);
    return w;
}

std::size_t BinaryMatrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
    return w;
}

std::size_t BinaryMatrix::row_intersection(std::size_t i, std::size_t j) const {
    const std::uint64_t* a = bits_.data() + i * words_;
    const std::uint64_t* b = bits_.data() + j * words_;
    std::size_t w = 0;
    for (std::size_t k = 0; k < words_; ++k) w += std::popcount(a[k] & b[k]);
    return w;
}

BitVec BinaryMatrix::row_as_vec(std::size_t r) const {
    BitVec v(cols_);
    const std::uint64_t* p = bits_.data() + r * words_;
    std::copy(p, p + words_, v.words().begin());
    return v;
}

BitVec BinaryMatrix::col_as_vec(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* p = bits_.data() + r * words_;
        for (std::size_t wi = 0; wi < words_; ++wi) {
            std::uint64_t w = p[wi];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                t.set(wi * 64 + b, r, true);
            }
        }
    }
    return t;
}

std::size_t rank(const BinaryMatrix& m) {
    BinaryMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && !a.get(piv, c)) ++piv;
        if (piv == a.rows()) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = piv + 1; i < a.rows(); ++i)
            if (a.get(i, c)) a.xor_rows(i, r);
        ++r;
    }
    return r;
}

BinaryMatrix gram(const BinaryMatrix& m) {
    BinaryMatrix g(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.rows(); ++j) {
            bool bit = m.row_intersection(i, j) & 1;
            if (bit) {
                g.set(i, j, true);
                g.set(j, i, true);
            }
        }
    return g;
}

BinaryMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    BinaryMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row_words(i);
        auto crow = c.row_words(i);
        for (std::size_t wi = 0; wi < arow.size(); ++wi) {
            std::uint64_t w = arow[wi];
            while (w) {
                int bit = std::countr_zero(w);
                w &= w - 1;
                auto brow = b.row_words(wi * 64 + bit);
                for (std::size_t k = 0; k < crow.size(); ++k) crow[k] ^= brow[k];
            }
        }
    }
    return c;
}

std::vector<BitVec> nullspace_basis(const BinaryMatrix& m) {
    BinaryMatrix a = m;
    std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && !a.get(piv, c)) ++piv;
        if (piv == rows) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a.get(i, c)) a.xor_rows(i, r);
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVec x(cols);
        x.set(f, true);
        for (std::size_t ri = 0; ri < pivot_col.size(); ++ri)
            if (a.get(ri, f)) x.set(pivot_col[ri], true);
        basis.push_back(std::move(x));
    }
    return basis;
}

BitVec mat_vec(const BinaryMatrix& m, const BitVec& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
    BitVec y(m.rows());
    auto xw = x.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto rw = m.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & xw[i];
        if (std::popcount(acc) & 1) y.set(r, true);
    }
    return y;
}

bool RowBasis::insert(BitVec v) {
    if (v.size() != width_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [lead, row] : rows_) {
        if (v.get(lead)) v.xor_with(row);
    }
    if (!v.any()) return false;
    std::size_t lead = 0;
    while (!v.get(lead)) ++lead;
    rows_.emplace_back(lead, std::move(v));
    return true;
}

bool RowBasis::contains(const BitVec& v) const {
    BitVec r = v;
    for (const auto& [lead, row] : rows_) {
        if (r.get(lead)) r.xor_with(row);
    }
    return !r.any();
}

} // namespace ebw::gf2
