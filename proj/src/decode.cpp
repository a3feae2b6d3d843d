#include "ebw/decode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "ebw/errors.hpp"

namespace ebw::decode {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    // one splitmix step over the combined words keeps streams well separated
    SplitMix64 g(master ^ (trial * 0x9e3779b97f4a7c15ull) ^ 0x6a09e667f3bcc909ull);
    return g.next();
}

SyndromeDecoder::SyndromeDecoder(const gf2::BinaryMatrix& h, int t_max)
    : n_(h.cols()), m_(h.rows()), t_max_(t_max) {
    if (t_max < 0) throw AdmissibilityError("t_max must be nonnegative");
    double total = 1, binom = 1;
    for (int w = 1; w <= t_max; ++w) {
        binom = binom * static_cast<double>(n_ - w + 1) / w;
        total += binom;
    }
    if (total > 5e6) throw InfeasibleError("syndrome table would be too large");

    std::vector<gf2::BitVec> cols;
    cols.reserve(n_);
    for (std::size_t c = 0; c < n_; ++c) cols.push_back(h.col_as_vec(c));

    // enumerate error supports by increasing weight so the first entry per
    // syndrome is a minimum-weight representative
    std::vector<std::uint64_t> key(cols.empty() ? 0 : cols[0].words().size());
    auto lookup_insert = [&](const gf2::BitVec& syn, const std::vector<std::uint32_t>& sup) {
        key.assign(syn.words().begin(), syn.words().end());
        auto [it, inserted] = table_.try_emplace(key);
        if (inserted) {
            it->second.support = sup;
        } else if (it->second.support.size() == sup.size()) {
            it->second.ambiguous = true;
        }
    };

    lookup_insert(gf2::BitVec(m_), {});
    std::vector<std::uint32_t> sup;
    for (int w = 1; w <= t_max; ++w) {
        sup.assign(w, 0);
        for (int i = 0; i < w; ++i) sup[i] = i;
        while (true) {
            gf2::BitVec syn(m_);
            for (std::uint32_t c : sup) syn.xor_with(cols[c]);
            lookup_insert(syn, sup);
            int i = w - 1;
            while (i >= 0 && sup[i] == n_ - w + i) --i;
            if (i < 0) break;
            ++sup[i];
            for (int j = i + 1; j < w; ++j) sup[j] = sup[j - 1] + 1;
        }
    }
}

std::optional<gf2::BitVec> SyndromeDecoder::decode(const gf2::BitVec& syndrome) const {
    if (syndrome.size() != m_) throw AdmissibilityError("syndrome length mismatch");
    std::vector<std::uint64_t> key(syndrome.words().begin(), syndrome.words().end());
    auto it = table_.find(key);
    if (it == table_.end() || it->second.ambiguous) return std::nullopt;
    gf2::BitVec e(n_);
    for (std::uint32_t c : it->second.support) e.set(c, true);
    return e;
}

BpResult sum_product_decode(const gf2::BinaryMatrix& h,
                            const std::vector<double>& prior_llr,
                            const gf2::BitVec& syndrome, int max_iters) {
    std::size_t m = h.rows(), n = h.cols();
    if (prior_llr.size() != n) throw AdmissibilityError("prior length mismatch");
    if (syndrome.size() != m) throw AdmissibilityError("syndrome length mismatch");

    // edge lists in check-major order
    std::vector<std::vector<int>> check_bits(m);
    std::vector<std::vector<int>> bit_edges(n);   // indices into flat edge arrays
    std::vector<int> edge_bit;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (h.get(r, c)) {
                check_bits[r].push_back(static_cast<int>(c));
                edge_bit.push_back(static_cast<int>(c));
            }
    std::vector<std::size_t> check_off(m + 1, 0);
    for (std::size_t r = 0; r < m; ++r) check_off[r + 1] = check_off[r] + check_bits[r].size();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t e = check_off[r]; e < check_off[r + 1]; ++e)
            bit_edges[edge_bit[e]].push_back(static_cast<int>(e));

    std::size_t edges = edge_bit.size();
    std::vector<double> msg_vc(edges), msg_cv(edges, 0.0);
    for (std::size_t e = 0; e < edges; ++e) msg_vc[e] = prior_llr[edge_bit[e]];

    constexpr double kClamp = 30.0;
    BpResult res;
    res.estimate = gf2::BitVec(n);
    for (int iter = 1; iter <= max_iters; ++iter) {
        // check to bit
        for (std::size_t r = 0; r < m; ++r) {
            double sign = syndrome.get(r) ? -1.0 : 1.0;
            std::size_t lo = check_off[r], hi = check_off[r + 1];
            double prod = 1.0;
            for (std::size_t e = lo; e < hi; ++e) prod *= std::tanh(msg_vc[e] / 2.0);
            for (std::size_t e = lo; e < hi; ++e) {
                double t = std::tanh(msg_vc[e] / 2.0);
                double rest;
                if (std::abs(t) > 1e-12) {
                    rest = prod / t;
                } else {
                    rest = 1.0;
                    for (std::size_t e2 = lo; e2 < hi; ++e2)
                        if (e2 != e) rest *= std::tanh(msg_vc[e2] / 2.0);
                }
                rest = std::clamp(rest, -0.999999999999, 0.999999999999);
                msg_cv[e] = sign * 2.0 * std::atanh(rest);
            }
        }
        // bit to check, posterior, decision
        for (std::size_t c = 0; c < n; ++c) {
            double total = prior_llr[c];
            for (int e : bit_edges[c]) total += msg_cv[e];
            for (int e : bit_edges[c])
                msg_vc[e] = std::clamp(total - msg_cv[e], -kClamp, kClamp);
            res.estimate.set(c, total < 0.0);
        }
        res.iterations = iter;
        if (gf2::mat_vec(h, res.estimate) == syndrome) {
            res.converged = true;
            return res;
        }
    }
    return res;
}

std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials,
                                          double z) {
    if (trials == 0) throw AdmissibilityError("need at least one trial");
    double nf = static_cast<double>(trials);
    double phat = static_cast<double>(failures) / nf;
    double z2 = z * z;
    double denom = 1.0 + z2 / nf;
    double center = (phat + z2 / (2.0 * nf)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / nf + z2 / (4.0 * nf * nf)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("EBW_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct TrialCounts {
    std::uint64_t block = 0, x = 0, z = 0;
};

} // namespace

SimResult simulate_depolarizing(const gf2::BinaryMatrix& h, DepolarizingModel model,
                                std::uint64_t trials, DecoderKind decoder,
                                std::uint64_t seed, SimOptions options) {
    if (model.p < 0.0 || model.p > 1.0) throw AdmissibilityError("p must lie in [0, 1]");
    std::size_t n = h.cols();

    const SyndromeDecoder* table = nullptr;
    SyndromeDecoder table_storage = decoder == DecoderKind::syndrome_table
        ? SyndromeDecoder(h, options.t_max)
        : SyndromeDecoder(h, 0);
    if (decoder == DecoderKind::syndrome_table) table = &table_storage;

    double q = 2.0 * model.p / 3.0;   // marginal flip rate per component
    std::vector<double> prior(n, q > 0.0 ? std::log((1.0 - q) / q) : 50.0);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, TrialCounts& out) {
        gf2::BitVec ex(n), ez(n);
        for (std::uint64_t t = lo; t < hi; ++t) {
            SplitMix64 rng(trial_seed(seed, t));
            ex.clear();
            ez.clear();
            for (std::size_t i = 0; i < n; ++i) {
                double u = rng.next_double();
                if (u < model.p / 3.0) {
                    ex.set(i, true);                    // X
                } else if (u < 2.0 * model.p / 3.0) {
                    ex.set(i, true);                    // Y
                    ez.set(i, true);
                } else if (u < model.p) {
                    ez.set(i, true);                    // Z
                }
            }
            bool xfail, zfail;
            if (decoder == DecoderKind::syndrome_table) {
                auto dx = table->decode(gf2::mat_vec(h, ex));
                auto dz = table->decode(gf2::mat_vec(h, ez));
                xfail = !dx || *dx != ex;
                zfail = !dz || *dz != ez;
            } else {
                BpResult bx = sum_product_decode(h, prior, gf2::mat_vec(h, ex),
                                                 options.bp_max_iters);
                BpResult bz = sum_product_decode(h, prior, gf2::mat_vec(h, ez),
                                                 options.bp_max_iters);
                xfail = !bx.converged || bx.estimate != ex;
                zfail = !bz.converged || bz.estimate != ez;
            }
            out.x += xfail;
            out.z += zfail;
            out.block += (xfail || zfail);
        }
    };

    int nthreads = resolve_threads(options.threads);
    nthreads = static_cast<int>(std::min<std::uint64_t>(nthreads, std::max<std::uint64_t>(trials, 1)));
    std::vector<TrialCounts> counts(nthreads);
    if (nthreads <= 1) {
        run_range(0, trials, counts[0]);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = trials / nthreads, extra = trials % nthreads, lo = 0;
        for (int i = 0; i < nthreads; ++i) {
            std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(i) < extra ? 1 : 0);
            pool.emplace_back(run_range, lo, hi, std::ref(counts[i]));
            lo = hi;
        }
        for (auto& th : pool) th.join();
    }

    SimResult res;
    res.trials = trials;
    res.p = model.p;
    res.seed = seed;
    res.decoder = decoder == DecoderKind::syndrome_table ? "syndrome" : "sum_product";
    for (const auto& c : counts) {
        res.block_errors += c.block;
        res.x_failures += c.x;
        res.z_failures += c.z;
    }
    res.rate = trials ? static_cast<double>(res.block_errors) / static_cast<double>(trials) : 0.0;
    if (trials) {
        auto [lo, hi] = wilson_interval(res.block_errors, trials);
        res.wilson_lo = lo;
        res.wilson_hi = hi;
    }
    return res;
}

} // namespace ebw::decode
