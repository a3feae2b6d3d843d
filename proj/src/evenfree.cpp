#include "ebw/evenfree.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "ebw/errors.hpp"

namespace ebw::evenfree {

namespace {

// exhaustive search for even configurations of exactly `target` blocks.
//
// Branching: the first block ranges over all indices (it is the least index of
// any configuration found under it); afterwards every added block must cover
// the lowest point of odd parity, which makes each configuration reachable and
// keeps the tree narrow.  Partial selections whose parity already closed out
// are pruned: their extensions all contain a smaller even configuration.
struct ConfigSearch {
    const std::vector<std::vector<int>>& blocks;
    std::vector<std::vector<int>> containing;  // point -> block indices
    int max_block = 0;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    int target = 0;
    int first = 0;
    std::vector<std::uint64_t> parity;
    int odd_count = 0;
    std::vector<int> chosen;
    std::vector<char> used;
    std::optional<std::vector<int>> best;

    ConfigSearch(int v, const std::vector<std::vector<int>>& blks, long long budget)
        : blocks(blks), containing(v), budget(budget), parity((v + 63) / 64, 0),
          used(blks.size(), 0) {
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            max_block = std::max(max_block, static_cast<int>(blocks[b].size()));
            for (int p : blocks[b]) containing[p].push_back(static_cast<int>(b));
        }
    }

    void toggle(int b) {
        for (int p : blocks[b]) {
            std::uint64_t mask = std::uint64_t{1} << (p & 63);
            std::uint64_t& w = parity[p >> 6];
            odd_count += (w & mask) ? -1 : 1;
            w ^= mask;
        }
    }

    int lowest_odd() const {
        for (std::size_t i = 0; i < parity.size(); ++i)
            if (parity[i]) return static_cast<int>(i * 64 + std::countr_zero(parity[i]));
        return -1;
    }

    void record() {
        std::vector<int> w = chosen;
        std::sort(w.begin(), w.end());
        if (!best || w < *best) best = std::move(w);
    }

    void dfs() {
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        int placed = static_cast<int>(chosen.size());
        if (odd_count == 0) {
            if (placed == target) record();
            return;  // configurations through an even subset are never minimal
        }
        if (placed == target) return;
        int remaining = target - placed;
        if (static_cast<long long>(odd_count) > static_cast<long long>(remaining) * max_block)
            return;
        int p = lowest_odd();
        for (int b : containing[p]) {
            if (b <= first || used[b]) continue;
            used[b] = 1;
            chosen.push_back(b);
            toggle(b);
            dfs();
            toggle(b);
            chosen.pop_back();
            used[b] = 0;
            if (out_of_budget) return;
        }
    }

    // true when the size was searched to completion
    bool run(int size) {
        target = size;
        best.reset();
        for (int b0 = 0; b0 + size <= static_cast<int>(blocks.size()); ++b0) {
            first = b0;
            used[b0] = 1;
            chosen.push_back(b0);
            toggle(b0);
            dfs();
            toggle(b0);
            chosen.pop_back();
            used[b0] = 0;
            if (out_of_budget) return false;
        }
        return true;
    }
};

} // namespace

EvenFreeReport min_even_configuration(const designs::Design& d, int cap,
                                      long long node_budget) {
    if (cap < 1) throw AdmissibilityError("cap must be positive");
    EvenFreeReport rep;
    rep.cap = cap;
    if (d.blocks.empty()) {
        rep.max_verified_r = cap;
        return rep;
    }

    ConfigSearch search(d.v, d.blocks, node_budget);
    bool all_odd = std::all_of(d.blocks.begin(), d.blocks.end(),
                               [](const auto& b) { return b.size() % 2 == 1; });

    rep.max_verified_r = 1;  // a single block covers its points once
    for (int s = 2; s <= cap; ++s) {
        // a configuration of odd total point degree cannot be even
        if (all_odd && s % 2 == 1) {
            rep.max_verified_r = s;
            continue;
        }
        bool done = search.run(s);
        rep.nodes = search.nodes;
        if (!done) {
            rep.complete = false;
            if (search.best) rep.witness = search.best;  // size is still minimal
            return rep;
        }
        if (search.best) {
            rep.witness = search.best;
            rep.max_verified_r = s - 1;
            return rep;
        }
        rep.max_verified_r = s;
    }
    rep.nodes = search.nodes;
    return rep;
}

long long count_pasch(const designs::Design& d) {
    for (const auto& b : d.blocks)
        if (b.size() != 3) throw AdmissibilityError("Pasch count needs a triple system");

    // pair -> block lookup; rejects designs that are not index one
    std::vector<int> pair_block(static_cast<std::size_t>(d.v) * d.v, -1);
    auto at = [&](int x, int y) -> int& {
        if (x > y) std::swap(x, y);
        return pair_block[static_cast<std::size_t>(x) * d.v + y];
    };
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const auto& b = d.blocks[bi];
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int& slot = at(b[i], b[j]);
                if (slot != -1) throw AdmissibilityError("pair covered twice");
                slot = static_cast<int>(bi);
            }
    }

    // every unordered pair of blocks through a common point extends to at most
    // one Pasch per matching of the leftover points; each Pasch shows up once
    // for each of its six block pairs
    long long hits = 0;
    int nb = static_cast<int>(d.blocks.size());
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            const auto& b1 = d.blocks[i];
            const auto& b2 = d.blocks[j];
            int shared = -1, count = 0;
            for (int x : b1)
                for (int y : b2)
                    if (x == y) {
                        shared = x;
                        ++count;
                    }
            if (count != 1) continue;
            int r1[2], r2[2], n1 = 0, n2 = 0;
            for (int x : b1)
                if (x != shared) r1[n1++] = x;
            for (int y : b2)
                if (y != shared) r2[n2++] = y;
            for (int m = 0; m < 2; ++m) {
                int d1 = r2[m], d2 = r2[1 - m];
                int k = at(r1[0], d1), l = at(r1[1], d2);
                if (k == -1 || l == -1 || k == l || k == i || k == j || l == i || l == j)
                    continue;
                const auto& b3 = d.blocks[k];
                const auto& b4 = d.blocks[l];
                int f = -1, fc = 0;
                for (int x : b3)
                    for (int y : b4)
                        if (x == y) {
                            f = x;
                            ++fc;
                        }
                if (fc != 1) continue;
                if (f == shared || f == r1[0] || f == r1[1] || f == d1 || f == d2) continue;
                ++hits;
            }
        }
    return hits / 6;
}

namespace {

// same search skeleton as ConfigSearch, but over matrix columns
struct ColumnSearch {
    std::size_t v;
    std::vector<std::vector<int>> col_support;   // column -> rows
    std::vector<std::vector<int>> cols_in_row;   // row -> columns
    int max_col = 0;

    int target = 0;
    int first = 0;
    std::vector<std::uint64_t> parity;
    int odd_count = 0;
    int placed = 0;
    std::vector<char> used;
    bool found = false;

    explicit ColumnSearch(const gf2::BinaryMatrix& h)
        : v(h.rows()), col_support(h.cols()), cols_in_row(h.rows()),
          parity((h.rows() + 63) / 64, 0), used(h.cols(), 0) {
        for (std::size_t r = 0; r < h.rows(); ++r) {
            auto rw = h.row_words(r);
            for (std::size_t wi = 0; wi < rw.size(); ++wi) {
                std::uint64_t w = rw[wi];
                while (w) {
                    int b = std::countr_zero(w);
                    w &= w - 1;
                    int c = static_cast<int>(wi * 64 + b);
                    col_support[c].push_back(static_cast<int>(r));
                    cols_in_row[r].push_back(c);
                }
            }
        }
        for (const auto& s : col_support)
            max_col = std::max(max_col, static_cast<int>(s.size()));
    }

    void toggle(int c) {
        for (int r : col_support[c]) {
            std::uint64_t mask = std::uint64_t{1} << (r & 63);
            std::uint64_t& w = parity[r >> 6];
            odd_count += (w & mask) ? -1 : 1;
            w ^= mask;
        }
    }

    void dfs() {
        if (found) return;
        if (odd_count == 0) {
            if (placed == target) found = true;
            return;
        }
        if (placed == target) return;
        int remaining = target - placed;
        if (static_cast<long long>(odd_count) > static_cast<long long>(remaining) * max_col)
            return;
        int r = -1;
        for (std::size_t i = 0; i < parity.size(); ++i)
            if (parity[i]) {
                r = static_cast<int>(i * 64 + std::countr_zero(parity[i]));
                break;
            }
        for (int c : cols_in_row[r]) {
            if (c <= first || used[c]) continue;
            used[c] = 1;
            ++placed;
            toggle(c);
            dfs();
            toggle(c);
            --placed;
            used[c] = 0;
            if (found) return;
        }
    }

    bool exists(int size) {
        target = size;
        found = false;
        for (int c0 = 0; c0 < static_cast<int>(col_support.size()); ++c0) {
            first = c0;
            used[c0] = 1;
            ++placed;
            toggle(c0);
            dfs();
            toggle(c0);
            --placed;
            used[c0] = 0;
            if (found) return true;
        }
        return false;
    }
};

} // namespace

std::optional<int> classical_min_distance(const gf2::BinaryMatrix& h, int cap) {
    if (cap < 1) throw AdmissibilityError("cap must be positive");
    ColumnSearch search(h);
    bool all_odd = true;
    for (const auto& s : search.col_support)
        if (s.size() % 2 == 0) all_odd = false;  // zero columns included
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (search.col_support[c].empty()) return 1;
    for (int s = 1; s <= cap; ++s) {
        if (all_odd && s % 2 == 1) continue;
        if (search.exists(s)) return s;
    }
    return std::nullopt;
}

} // namespace ebw::evenfree
