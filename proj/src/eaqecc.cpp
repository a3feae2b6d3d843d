#include "ebw/eaqecc.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ebw/arith.hpp"
#include "ebw/design.hpp"
#include "ebw/errors.hpp"
#include "ebw/evenfree.hpp"

namespace ebw::eaqecc {

OneEbitCheck one_ebit_structure_check(const gf2::BinaryMatrix& h) {
    OneEbitCheck chk;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i + 1; j < h.rows(); ++j) {
            std::size_t shared = h.row_intersection(i, j);
            if (shared != 1) {
                chk.condition = 1;
                chk.witness_a = static_cast<long long>(i);
                chk.witness_b = static_cast<long long>(j);
                chk.detail = "rows " + std::to_string(i) + " and " + std::to_string(j) +
                             " share " + std::to_string(shared) + " columns";
                return chk;
            }
        }
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t w = h.row_weight(i);
        if (w % 2 == 0 || w < 3) {
            chk.condition = 2;
            chk.witness_a = static_cast<long long>(i);
            chk.witness_b = static_cast<long long>(w);
            chk.detail = "row " + std::to_string(i) + " has weight " + std::to_string(w);
            return chk;
        }
    }
    for (std::size_t c = 0; c < h.cols(); ++c) {
        std::size_t w = h.col_weight(c);
        if (w < 2) {
            chk.condition = 3;
            chk.witness_a = static_cast<long long>(c);
            chk.witness_b = static_cast<long long>(w);
            chk.detail = "column " + std::to_string(c) + " has weight " + std::to_string(w);
            return chk;
        }
    }
    chk.ok = true;
    return chk;
}

bool pbd_equivalence_check(const gf2::BinaryMatrix& h) {
    designs::Design d;
    d.v = static_cast<int>(h.rows());
    d.blocks.reserve(h.cols());
    for (std::size_t c = 0; c < h.cols(); ++c) {
        std::vector<int> block;
        for (std::size_t r = 0; r < h.rows(); ++r)
            if (h.get(r, c)) block.push_back(static_cast<int>(r));
        d.blocks.push_back(std::move(block));
    }
    designs::PbdReport rep = designs::verify_pbd(d);
    if (!rep.structurally_valid) return false;  // some block has fewer than two points
    return rep.is_pbd && !rep.is_trivial && rep.odd_replicate;
}

RegularAdmissibility regular_admissibility(long long n, long long mu) {
    if (n < 1) throw AdmissibilityError("need n >= 1");
    if (mu < 2) throw AdmissibilityError("need mu >= 2");
    RegularAdmissibility adm;
    std::uint64_t disc = 1 + 4ull * static_cast<std::uint64_t>(n) *
                                 static_cast<std::uint64_t>(mu) *
                                 static_cast<std::uint64_t>(mu - 1);
    std::uint64_t s = 0;
    if (!is_square64(disc, &s)) return adm;
    adm.v = static_cast<long long>((1 + s) / 2);
    if ((*adm.v - 1) % (mu - 1) != 0) return adm;
    adm.replication = (*adm.v - 1) / (mu - 1);
    adm.admissible = (*adm.replication % 2 == 1);
    return adm;
}

namespace {

long long hillebrandt_lower(long long v, long long mu) {
    // least x with x (x - 1) >= (v - 1)(v - mu) / mu, in exact arithmetic
    long long num = (v - 1) * (v - mu);
    long long a = num / mu + (num % mu != 0);
    long long x = 1;
    while (x * (x - 1) < a) ++x;
    return x;
}

} // namespace

BoundsReport dimension_bounds(long long n, long long mu) {
    BoundsReport rep;
    rep.n = n;
    rep.mu = mu;
    RegularAdmissibility adm = regular_admissibility(n, mu);
    rep.odd_replication_admissible = adm.admissible;
    if (!adm.admissible)
        throw AdmissibilityError("no odd-replicate regular design with these parameters");
    long long v = *adm.v;
    rep.v = v;
    long long s = 2 * v - 1;  // sqrt(1 + 4 n mu (mu-1))

    rep.hillebrandt_rank_lower = hillebrandt_lower(v, mu);
    rep.k_lower_raw = n - s;
    rep.k_lower = std::max(0ll, n - s);
    rep.k_upper = n - 2 * *rep.hillebrandt_rank_lower + 1;

    if (mu == 3 && s % 8 == 5) {
        // s + 3 = 2^(t+1) u with u odd
        long long rest = s + 3;
        int twos = std::countr_zero(static_cast<unsigned long long>(rest));
        StsKWindow w;
        w.t = twos - 1;
        w.u = rest >> twos;
        w.k_lower = n - s;
        w.k_upper = n - s + 2 * w.t - 2;
        rep.sts_window = w;
    }
    return rep;
}

BoundsReport audit_bounds(const gf2::BinaryMatrix& h) {
    long long n = static_cast<long long>(h.cols());
    std::optional<long long> mu;
    {
        std::size_t w0 = h.col_weight(0);
        bool uniform = true;
        for (std::size_t c = 1; c < h.cols(); ++c)
            if (h.col_weight(c) != w0) {
                uniform = false;
                break;
            }
        if (uniform && w0 >= 2) mu = static_cast<long long>(w0);
    }

    BoundsReport rep;
    if (mu) {
        RegularAdmissibility adm = regular_admissibility(n, *mu);
        if (adm.admissible) {
            rep = dimension_bounds(n, *mu);
        } else {
            rep.odd_replication_admissible = false;
            rep.v = adm.v;
            if (adm.v) rep.hillebrandt_rank_lower = hillebrandt_lower(*adm.v, *mu);
        }
    }
    rep.n = n;
    rep.mu = mu;

    long long rk = static_cast<long long>(gf2::rank(h));
    long long c = static_cast<long long>(gf2::rank(gf2::gram(h)));
    rep.computed_rank = rk;
    rep.computed_k = n - 2 * rk + c;

    // the design-theoretic bounds assume an index-one structure on the rows
    bool index_one = rep.v && *rep.v == static_cast<long long>(h.rows());
    for (std::size_t i = 0; index_one && i < h.rows(); ++i)
        for (std::size_t j = i + 1; j < h.rows(); ++j)
            if (h.row_intersection(i, j) != 1) {
                index_one = false;
                break;
            }

    if (index_one && rep.hillebrandt_rank_lower) {
        if (rk < *rep.hillebrandt_rank_lower || rk > *rep.v)
            rep.violations.push_back(
                {"hillebrandt_rank", *rep.hillebrandt_rank_lower, *rep.v, rk});
    }
    if (index_one && c == 1) {
        if (rep.k_lower && rep.k_upper &&
            (*rep.computed_k < *rep.k_lower || *rep.computed_k > *rep.k_upper))
            rep.violations.push_back({"k_window", *rep.k_lower, *rep.k_upper, *rep.computed_k});
        if (rep.sts_window &&
            (*rep.computed_k < rep.sts_window->k_lower ||
             *rep.computed_k > rep.sts_window->k_upper))
            rep.violations.push_back({"sts_k_window", rep.sts_window->k_lower,
                                      rep.sts_window->k_upper, *rep.computed_k});
    }
    rep.consistent = rep.violations.empty();
    return rep;
}

namespace {

// enumerates minimal zero-XOR column subsets of exactly `target` columns,
// invoking the sink on each; sink returns false to stop the search
struct DependentSetSearch {
    const gf2::BinaryMatrix& h;
    std::vector<std::vector<int>> col_support, cols_in_row;
    int max_col = 0;
    long long nodes = 0, budget;
    bool out_of_budget = false;

    int target = 0, first = 0;
    std::vector<std::uint64_t> parity;
    int odd_count = 0;
    std::vector<int> chosen;
    std::vector<char> used;
    bool stopped = false;
    bool (*sink)(void*, const std::vector<int>&) = nullptr;
    void* sink_ctx = nullptr;

    DependentSetSearch(const gf2::BinaryMatrix& h, long long budget)
        : h(h), col_support(h.cols()), cols_in_row(h.rows()),
          budget(budget), parity((h.rows() + 63) / 64, 0), used(h.cols(), 0) {
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t cc = 0; cc < h.cols(); ++cc)
                if (h.get(r, cc)) {
                    col_support[cc].push_back(static_cast<int>(r));
                    cols_in_row[r].push_back(static_cast<int>(cc));
                }
        for (const auto& s : col_support)
            max_col = std::max(max_col, static_cast<int>(s.size()));
    }

    void toggle(int cc) {
        for (int r : col_support[cc]) {
            std::uint64_t mask = std::uint64_t{1} << (r & 63);
            std::uint64_t& w = parity[r >> 6];
            odd_count += (w & mask) ? -1 : 1;
            w ^= mask;
        }
    }

    void dfs() {
        if (stopped || out_of_budget) return;
        if (++nodes > budget) {
            out_of_budget = true;
            return;
        }
        int placed = static_cast<int>(chosen.size());
        if (odd_count == 0) {
            if (placed == target && !sink(sink_ctx, chosen)) stopped = true;
            return;
        }
        if (placed == target) return;
        if (static_cast<long long>(odd_count) >
            static_cast<long long>(target - placed) * max_col)
            return;
        int r = -1;
        for (std::size_t i = 0; i < parity.size(); ++i)
            if (parity[i]) {
                r = static_cast<int>(i * 64 + std::countr_zero(parity[i]));
                break;
            }
        for (int cc : cols_in_row[r]) {
            if (cc <= first || used[cc]) continue;
            used[cc] = 1;
            chosen.push_back(cc);
            toggle(cc);
            dfs();
            toggle(cc);
            chosen.pop_back();
            used[cc] = 0;
            if (stopped || out_of_budget) return;
        }
    }

    void run(int size) {
        target = size;
        stopped = false;
        for (int c0 = 0; c0 + size <= static_cast<int>(col_support.size()); ++c0) {
            first = c0;
            used[c0] = 1;
            chosen.push_back(c0);
            toggle(c0);
            dfs();
            toggle(c0);
            chosen.pop_back();
            used[c0] = 0;
            if (stopped || out_of_budget) return;
        }
    }
};

} // namespace

QuantumDistance quantum_min_distance(const gf2::BinaryMatrix& h, int cap, int enum_limit) {
    std::size_t n = h.cols();
    long long rk = static_cast<long long>(gf2::rank(h));
    long long c = static_cast<long long>(gf2::rank(gf2::gram(h)));
    long long kq = static_cast<long long>(n) - 2 * rk + c;
    if (kq <= 0) return {QuantumDistance::Status::degenerate, 0};

    gf2::RowBasis rowspace(n);
    for (std::size_t r = 0; r < h.rows(); ++r) rowspace.insert(h.row_as_vec(r));

    std::size_t k = n - static_cast<std::size_t>(rk);
    if (k <= static_cast<std::size_t>(enum_limit)) {
        std::vector<gf2::BitVec> basis = gf2::nullspace_basis(h);
        gf2::BitVec x(n);
        int best = -1;
        std::uint64_t total = std::uint64_t{1} << k;
        for (std::uint64_t g = 1; g < total; ++g) {
            x.xor_with(basis[std::countr_zero(g)]);
            int w = static_cast<int>(x.weight());
            if ((best == -1 || w < best) && !rowspace.contains(x)) best = w;
        }
        if (best == -1 || best > cap) return {QuantumDistance::Status::above_cap, 0};
        return {QuantumDistance::Status::value, best};
    }

    // large code space: search weight-limited minimal codewords instead
    struct Ctx {
        const gf2::BinaryMatrix* h;
        const gf2::RowBasis* rowspace;
        bool hit = false;
    } ctx{&h, &rowspace, false};
    DependentSetSearch search(h, 1'000'000'000);
    search.sink_ctx = &ctx;
    search.sink = [](void* pv, const std::vector<int>& cols) {
        Ctx* context = static_cast<Ctx*>(pv);
        gf2::BitVec x(context->h->cols());
        for (int cc : cols) x.set(static_cast<std::size_t>(cc), true);
        if (!context->rowspace->contains(x)) {
            context->hit = true;
            return false;
        }
        return true;
    };
    for (int s = 1; s <= cap; ++s) {
        search.run(s);
        if (search.out_of_budget) return {QuantumDistance::Status::infeasible, 0};
        if (ctx.hit) return {QuantumDistance::Status::value, s};
    }
    return {QuantumDistance::Status::above_cap, 0};
}

EaqeccParams characterize(const gf2::BinaryMatrix& h, int distance_cap, bool with_quantum_d) {
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (h.row_weight(r) == 0)
            throw AdmissibilityError("zero row " + std::to_string(r));
    for (std::size_t c = 0; c < h.cols(); ++c)
        if (h.col_weight(c) == 0)
            throw AdmissibilityError("zero column " + std::to_string(c));

    EaqeccParams par;
    par.n = h.cols();
    par.rank = gf2::rank(h);
    par.classical_k = par.n - par.rank;
    par.c = gf2::rank(gf2::gram(h));
    par.quantum_k = 2 * static_cast<long long>(par.classical_k) -
                    static_cast<long long>(par.n) + static_cast<long long>(par.c);
    par.one_ebit = one_ebit_structure_check(h).ok;
    std::optional<long long> mu;
    {
        std::size_t w0 = h.col_weight(0);
        bool uniform = true;
        for (std::size_t c = 1; c < h.cols(); ++c)
            if (h.col_weight(c) != w0) {
                uniform = false;
                break;
            }
        if (uniform && w0 >= 2) mu = static_cast<long long>(w0);
    }
    par.cycles = tanner::analyze_cycles(h, mu);
    par.distance_cap = distance_cap;
    par.classical_d = evenfree::classical_min_distance(h, distance_cap);
    if (with_quantum_d) par.quantum_d = quantum_min_distance(h, distance_cap);
    return par;
}

} // namespace ebw::eaqecc
