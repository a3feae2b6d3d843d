#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ebw::gf2 {

// packed bit vector, little-endian within 64-bit words, unused high bits zero
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void xor_with(const BitVec& other);
    std::size_t weight() const;
    bool any() const;
    void clear();
    std::vector<int> support() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool operator==(const BitVec&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// dense binary matrix, rows packed into 64-bit words, trailing bits of the
// last word in each row always zero
class BinaryMatrix {
public:
    BinaryMatrix(std::size_t rows, std::size_t cols);
    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows01);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value) {
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        std::uint64_t& w = bits_[r * words_ + (c >> 6)];
        if (value) w |= mask;
        else w &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {bits_.data() + r * words_, words_};
    }
    std::span<std::uint64_t> row_words(std::size_t r) {
        return {bits_.data() + r * words_, words_};
    }

    void xor_rows(std::size_t dst, std::size_t src);  // row dst ^= row src
    void swap_rows(std::size_t a, std::size_t b);

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;
    // |row i AND row j|
    std::size_t row_intersection(std::size_t i, std::size_t j) const;

    BitVec row_as_vec(std::size_t r) const;
    BitVec col_as_vec(std::size_t c) const;
    BinaryMatrix transposed() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// all of these leave their arguments untouched
std::size_t rank(const BinaryMatrix& m);
BinaryMatrix gram(const BinaryMatrix& m);                             // m * m^T
BinaryMatrix multiply(const BinaryMatrix& a, const BinaryMatrix& b);
std::vector<BitVec> nullspace_basis(const BinaryMatrix& m);
BitVec mat_vec(const BinaryMatrix& m, const BitVec& x);

// incremental row-echelon basis, used for span membership tests
class RowBasis {
public:
    explicit RowBasis(std::size_t width) : width_(width) {}
    // reduce v against the basis; true if v was independent (and absorbed)
    bool insert(BitVec v);
    bool contains(const BitVec& v) const;
    std::size_t dim() const { return rows_.size(); }

private:
    std::size_t width_;
    std::vector<std::pair<std::size_t, BitVec>> rows_;  // (leading bit, row)
};

} // namespace ebw::gf2
