#include "ebw/design.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "ebw/errors.hpp"
#include "ebw/galois.hpp"

namespace ebw::designs {

void Design::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
}

PbdReport verify_pbd(const Design& d) {
    PbdReport rep;
    if (d.v < 1) {
        rep.structurally_valid = false;
        rep.structural_error = "point count must be positive";
        return rep;
    }
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const auto& b = d.blocks[bi];
        std::string label = "block " + std::to_string(bi);
        if (b.size() < 2) {
            rep.structurally_valid = false;
            rep.structural_error = label + " has fewer than two points";
            rep.offending_block = static_cast<int>(bi);
            return rep;
        }
        std::vector<int> sorted = b;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= d.v) {
                rep.structurally_valid = false;
                rep.structural_error = label + " has out-of-range point " + std::to_string(sorted[i]);
                rep.offending_block = static_cast<int>(bi);
                return rep;
            }
            if (i > 0 && sorted[i] == sorted[i - 1]) {
                rep.structurally_valid = false;
                rep.structural_error = label + " repeats point " + std::to_string(sorted[i]);
                rep.offending_block = static_cast<int>(bi);
                return rep;
            }
        }
    }

    rep.replication.assign(d.v, 0);
    std::vector<int> coverage(static_cast<std::size_t>(d.v) * d.v, 0);
    for (const auto& b : d.blocks) {
        rep.block_sizes.insert(static_cast<int>(b.size()));
        for (std::size_t i = 0; i < b.size(); ++i) {
            ++rep.replication[b[i]];
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                int x = std::min(b[i], b[j]), y = std::max(b[i], b[j]);
                ++coverage[static_cast<std::size_t>(x) * d.v + y];
            }
        }
    }

    rep.is_pbd = true;
    for (int x = 0; x < d.v && rep.is_pbd; ++x)
        for (int y = x + 1; y < d.v; ++y) {
            int c = coverage[static_cast<std::size_t>(x) * d.v + y];
            if (c != 1) {
                rep.is_pbd = false;
                rep.counterexample_pair = {x, y};
                rep.counterexample_coverage = c;
                break;
            }
        }

    rep.equireplicate = !rep.replication.empty() &&
        std::all_of(rep.replication.begin(), rep.replication.end(),
                    [&](int r) { return r == rep.replication[0]; });
    if (rep.equireplicate) rep.replication_number = rep.replication[0];
    rep.odd_replicate = std::all_of(rep.replication.begin(), rep.replication.end(),
                                    [](int r) { return r % 2 == 1; });
    rep.is_trivial = d.blocks.empty() ||
        (d.blocks.size() == 1 && static_cast<int>(d.blocks[0].size()) == d.v);
    rep.is_steiner = rep.is_pbd && !rep.is_trivial && rep.block_sizes.size() == 1;
    return rep;
}

gf2::BinaryMatrix incidence_matrix(const Design& d) {
    if (d.v < 1 || d.blocks.empty())
        throw AdmissibilityError("incidence matrix needs at least one point and one block");
    gf2::BinaryMatrix m(static_cast<std::size_t>(d.v), d.blocks.size());
    for (std::size_t j = 0; j < d.blocks.size(); ++j)
        for (int p : d.blocks[j]) {
            if (p < 0 || p >= d.v) throw AdmissibilityError("block point out of range");
            m.set(static_cast<std::size_t>(p), j, true);
        }
    return m;
}

namespace {

// Bose: v = 6n+3, points (i, k) -> 3i + k over the idempotent commutative
// quasigroup i*j = (i+j)(n+1) mod 2n+1
Design sts_bose(int v) {
    int n = (v - 3) / 6;
    int m = 2 * n + 1;
    auto op = [&](int i, int j) { return ((i + j) * (n + 1)) % m; };
    Design d;
    d.v = v;
    for (int i = 0; i < m; ++i) d.blocks.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < 3; ++k)
                d.blocks.push_back({3 * i + k, 3 * j + k, 3 * op(i, j) + (k + 1) % 3});
    d.canonicalize();
    return d;
}

// Skolem: v = 6n+1, points (i, k) -> 3i + k plus one extra point 6n, over the
// half-idempotent commutative quasigroup sigma(i + j) on Z_2n
Design sts_skolem(int v) {
    int n = (v - 1) / 6;
    int m = 2 * n;
    auto sigma = [&](int e) {
        e %= m;
        return (e % 2 == 0) ? e / 2 : n + (e - 1) / 2;
    };
    int inf = 6 * n;
    Design d;
    d.v = v;
    for (int i = 0; i < n; ++i) d.blocks.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 3; ++k)
            d.blocks.push_back({inf, 3 * (n + i) + k, 3 * i + (k + 1) % 3});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < 3; ++k)
                d.blocks.push_back({3 * i + k, 3 * j + k, 3 * sigma(i + j) + (k + 1) % 3});
    d.canonicalize();
    return d;
}

} // namespace

Design construct_sts(int v) {
    if (v < 3) throw AdmissibilityError("triple system needs v >= 3");
    int r = v % 6;
    if (r == 3) return sts_bose(v);
    if (r == 1) return sts_skolem(v);
    throw AdmissibilityError("no triple system on " + std::to_string(v) +
                             " points (v must be 1 or 3 mod 6)");
}

Design construct_pg_lines(int m) {
    if (m < 2) throw AdmissibilityError("projective dimension parameter must be at least 2");
    if (m > 16) throw AdmissibilityError("projective dimension parameter too large");
    int v = (1 << m) - 1;
    Design d;
    d.v = v;
    // lines are the triples {a, b, a^b} of nonzero vectors
    for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b) {
            int c = a ^ b;
            if (c > b) d.blocks.push_back({a - 1, b - 1, c - 1});
        }
    d.canonicalize();
    return d;
}

Design construct_ag_lines(int m, int q) {
    if (m < 2) throw AdmissibilityError("affine dimension must be at least 2");
    GaloisField f(q);
    long long npts = 1;
    for (int i = 0; i < m; ++i) {
        npts *= q;
        if (npts > (1 << 20)) throw AdmissibilityError("affine geometry too large");
    }
    int v = static_cast<int>(npts);

    auto coords = [&](int idx) {
        std::vector<int> c(m);
        for (int i = m - 1; i >= 0; --i) {
            c[i] = idx % q;
            idx /= q;
        }
        return c;
    };
    auto index_of = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int x : c) idx = idx * q + x;
        return idx;
    };

    Design d;
    d.v = v;
    std::vector<char> used(v);
    for (int dir = 0; dir < v; ++dir) {
        std::vector<int> dv = coords(dir);
        int first = 0;
        while (first < m && dv[first] == 0) ++first;
        if (first == m || dv[first] != 1) continue;  // canonical directions only
        std::fill(used.begin(), used.end(), 0);
        for (int a = 0; a < v; ++a) {
            if (used[a]) continue;
            std::vector<int> av = coords(a);
            std::vector<int> line;
            std::vector<int> pt(m);
            for (int t = 0; t < q; ++t) {
                for (int i = 0; i < m; ++i) pt[i] = f.add(av[i], f.mul(t, dv[i]));
                int idx = index_of(pt);
                used[idx] = 1;
                line.push_back(idx);
            }
            d.blocks.push_back(std::move(line));
        }
    }
    d.canonicalize();
    return d;
}

Design construct_projective_plane(int q) {
    GaloisField f(q);
    // normalized nonzero triples, leftmost nonzero coordinate 1, lex order
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead == 1) pts.push_back({a, b, c});
            }
    std::sort(pts.begin(), pts.end());

    Design d;
    d.v = static_cast<int>(pts.size());
    for (const auto& u : pts) {
        std::vector<int> line;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            int s = f.add(f.add(f.mul(u[0], p[0]), f.mul(u[1], p[1])), f.mul(u[2], p[2]));
            if (s == 0) line.push_back(static_cast<int>(i));
        }
        d.blocks.push_back(std::move(line));
    }
    d.canonicalize();
    return d;
}

DivisibilityCheck pbd_necessary_conditions(long long v, const std::set<int>& block_sizes) {
    if (v < 2) throw AdmissibilityError("need at least two points");
    if (block_sizes.empty()) throw AdmissibilityError("empty block size set");
    for (int k : block_sizes)
        if (k < 2 || k > v) throw AdmissibilityError("block size out of range");
    DivisibilityCheck c;
    for (int k : block_sizes) {
        c.alpha = std::gcd(c.alpha, static_cast<long long>(k - 1));
        c.beta = std::gcd(c.beta, static_cast<long long>(k) * (k - 1));
    }
    c.point_condition = (v - 1) % c.alpha == 0;
    c.pair_condition = (v * (v - 1)) % c.beta == 0;
    c.admissible = c.point_condition && c.pair_condition;
    return c;
}

} // namespace ebw::designs
