#include "ebw/tanner.hpp"

#include <bit>
#include <deque>
#include <string>
#include <vector>

#include "ebw/arith.hpp"
#include "ebw/errors.hpp"

namespace ebw::tanner {

bool has_four_cycle(const gf2::BinaryMatrix& h) {
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i + 1; j < h.rows(); ++j)
            if (h.row_intersection(i, j) >= 2) return true;
    return false;
}

long long count_four_cycles(const gf2::BinaryMatrix& h) {
    long long total = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i + 1; j < h.rows(); ++j) {
            long long lam = static_cast<long long>(h.row_intersection(i, j));
            total += lam * (lam - 1) / 2;
        }
    return total;
}

long long count_six_cycles(const gf2::BinaryMatrix& h) {
    std::size_t words = h.words_per_row();
    long long total = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        auto ri = h.row_words(i);
        for (std::size_t j = i + 1; j < h.rows(); ++j) {
            auto rj = h.row_words(j);
            for (std::size_t k = j + 1; k < h.rows(); ++k) {
                auto rk = h.row_words(k);
                // columns meeting exactly two of the three rows
                long long ij = 0, jk = 0, ik = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    ij += std::popcount(ri[w] & rj[w] & ~rk[w]);
                    jk += std::popcount(rj[w] & rk[w] & ~ri[w]);
                    ik += std::popcount(ri[w] & rk[w] & ~rj[w]);
                }
                total += ij * jk * ik;
            }
        }
    }
    return total;
}

std::optional<int> girth(const gf2::BinaryMatrix& h) {
    std::size_t v = h.rows(), n = h.cols();
    std::vector<std::vector<int>> adj(v + n);
    for (std::size_t r = 0; r < v; ++r) {
        auto rw = h.row_words(r);
        for (std::size_t wi = 0; wi < rw.size(); ++wi) {
            std::uint64_t w = rw[wi];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                int col = static_cast<int>(wi * 64 + b);
                adj[r].push_back(static_cast<int>(v) + col);
                adj[v + col].push_back(static_cast<int>(r));
            }
        }
    }

    int best = -1;
    std::vector<int> dist(v + n), parent(v + n);
    std::deque<int> queue;
    for (std::size_t s = 0; s < v + n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        queue.clear();
        queue.push_back(static_cast<int>(s));
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best != -1 && 2 * dist[u] + 2 > best) break;
            for (int w : adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w && parent[w] != u) {
                    int cyc = dist[u] + dist[w] + 1;
                    if (best == -1 || cyc < best) best = cyc;
                }
            }
        }
        if (best == 4) break;  // bipartite minimum
    }
    if (best == -1) return std::nullopt;
    return best;
}

long long predicted_six_cycles(long long n, long long mu) {
    if (n < 1 || mu < 2) throw AdmissibilityError("need n >= 1 and mu >= 2");
    std::uint64_t disc = 1 + 4ull * static_cast<std::uint64_t>(n) *
                                 static_cast<std::uint64_t>(mu) *
                                 static_cast<std::uint64_t>(mu - 1);
    std::uint64_t s = 0;
    if (!is_square64(disc, &s))
        throw AdmissibilityError("no integer point count for n=" + std::to_string(n) +
                                 ", mu=" + std::to_string(mu));
    long long v = static_cast<long long>((1 + s) / 2);
    if (v < mu) throw AdmissibilityError("point count smaller than block size");
    if (v > 2000000) throw AdmissibilityError("point count too large");
    long long prod = v * (v - 1) * (v - mu);
    if (prod % 6 != 0)
        throw AdmissibilityError("six-cycle count is not integral here");
    return prod / 6;
}

CycleReport analyze_cycles(const gf2::BinaryMatrix& h, std::optional<long long> mu) {
    CycleReport rep;
    rep.girth = girth(h);
    rep.four_cycles = count_four_cycles(h);
    rep.six_cycles = count_six_cycles(h);
    if (mu) {
        try {
            rep.predicted_six = predicted_six_cycles(static_cast<long long>(h.cols()), *mu);
        } catch (const AdmissibilityError&) {
            rep.predicted_six = std::nullopt;
        }
    }
    return rep;
}

} // namespace ebw::tanner
