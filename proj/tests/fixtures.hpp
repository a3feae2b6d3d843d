#pragma once

// hand-entered fixtures and small reference implementations the fast code is
// checked against
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ebw/design.hpp"
#include "ebw/gf2.hpp"

namespace testutil {

using Dense = std::vector<std::vector<int>>;

// development of {0, 1, 3} mod 7
inline ebw::designs::Design fano() {
    ebw::designs::Design d;
    d.v = 7;
    for (int i = 0; i < 7; ++i) d.blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
    d.canonicalize();
    return d;
}

inline Dense to_dense(const ebw::gf2::BinaryMatrix& m) {
    Dense out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    return out;
}

inline int naive_rank(Dense m) {
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

inline Dense naive_mul(const Dense& a, const Dense& b) {
    Dense c(a.size(), std::vector<int>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] ^= b[k][j];
    return c;
}

inline Dense naive_gram(const Dense& a) {
    Dense g(a.size(), std::vector<int>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            int s = 0;
            for (std::size_t k = 0; k < a[0].size(); ++k) s ^= a[i][k] & a[j][k];
            g[i][j] = s;
        }
    return g;
}

inline ebw::gf2::BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                            std::size_t cols, double density) {
    ebw::gf2::BinaryMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

inline bool subset_is_even(const ebw::designs::Design& d, const std::vector<int>& idx) {
    std::vector<int> deg(d.v, 0);
    for (int bi : idx)
        for (int p : d.blocks[bi]) deg[p] ^= 1;
    for (int x : deg)
        if (x) return false;
    return true;
}

// random matrix with girth above four, all row and column weights at least
// two, and at least one uncovered point pair; pure function of the seed
inline ebw::gf2::BinaryMatrix random_girth6_matrix(std::uint64_t seed) {
    for (std::uint64_t salt = 0;; ++salt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + salt);
        std::uniform_int_distribution<int> row_dist(5, 10);
        std::uniform_int_distribution<int> col_dist(8, 16);
        int rows = row_dist(rng);
        int cols = col_dist(rng);
        ebw::gf2::BinaryMatrix h(rows, cols);
        std::uniform_int_distribution<int> rpick(0, rows - 1);
        std::uniform_int_distribution<int> cpick(0, cols - 1);

        auto can_set = [&](int r, int c) {
            if (h.get(r, c)) return false;
            for (int r2 = 0; r2 < rows; ++r2)
                if (r2 != r && h.get(r2, c) && h.row_intersection(r, r2) > 0) return false;
            return true;
        };

        for (int attempt = 0; attempt < 60 * rows; ++attempt) {
            int r = rpick(rng);
            int c = cpick(rng);
            if (can_set(r, c)) h.set(r, c, true);
        }
        auto repair = [&](bool by_row) {
            int outer = by_row ? rows : cols;
            int inner = by_row ? cols : rows;
            for (int i = 0; i < outer; ++i) {
                std::size_t w = by_row ? h.row_weight(i) : h.col_weight(i);
                for (int j = 0; j < inner && w < 2; ++j) {
                    int r = by_row ? i : j;
                    int c = by_row ? j : i;
                    if (can_set(r, c)) {
                        h.set(r, c, true);
                        ++w;
                    }
                }
            }
        };
        repair(true);
        repair(false);

        bool ok = true;
        for (int r = 0; r < rows && ok; ++r) ok = h.row_weight(r) >= 2;
        for (int c = 0; c < cols && ok; ++c) ok = h.col_weight(c) >= 2;
        if (!ok) continue;

        // reject the (astronomically rare) case of full pair coverage
        bool covered_all = true;
        for (int a = 0; a < rows && covered_all; ++a)
            for (int b = a + 1; b < rows && covered_all; ++b)
                if (h.row_intersection(a, b) == 0) covered_all = false;
        if (covered_all) continue;
        return h;
    }
}

struct BruteEvenResult {
    int size = 0;                 // 0 when nothing found up to the cap
    long long count = 0;          // configurations at that size
    std::vector<int> first;       // lexicographically least witness
};

// exhaustive scan over block subsets in lexicographic order, sizes ascending
inline BruteEvenResult brute_min_even(const ebw::designs::Design& d, int cap) {
    int nb = static_cast<int>(d.blocks.size());
    for (int s = 2; s <= cap; ++s) {
        BruteEvenResult res;
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        if (s > nb) break;
        while (true) {
            if (subset_is_even(d, idx)) {
                if (res.count == 0) res.first = idx;
                ++res.count;
            }
            int i = s - 1;
            while (i >= 0 && idx[i] == nb - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (res.count > 0) {
            res.size = s;
            return res;
        }
    }
    return {};
}

} // namespace testutil
