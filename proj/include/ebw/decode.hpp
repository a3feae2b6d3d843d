#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ebw/gf2.hpp"

namespace ebw::decode {

// splitmix64: deterministic, trivially seedable, identical on every platform
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double next_double() {  // uniform in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

// stream seed for one trial, derived from the master seed
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

// bounded-distance decoding via a precomputed table of coset leaders up to
// weight t_max; decode fails (empty optional) when no error of weight <= t_max
// matches, or when the minimum-weight match is not unique
class SyndromeDecoder {
public:
    SyndromeDecoder(const gf2::BinaryMatrix& h, int t_max);
    std::optional<gf2::BitVec> decode(const gf2::BitVec& syndrome) const;
    int t_max() const { return t_max_; }

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& k) const {
            std::size_t h = 0xcbf29ce484222325ull;
            for (std::uint64_t w : k) {
                h ^= w;
                h *= 0x100000001b3ull;
            }
            return h;
        }
    };
    struct Entry {
        std::vector<std::uint32_t> support;
        bool ambiguous = false;
    };
    std::size_t n_, m_;
    int t_max_;
    std::unordered_map<std::vector<std::uint64_t>, Entry, KeyHash> table_;
};

struct BpResult {
    gf2::BitVec estimate;
    bool converged = false;
    int iterations = 0;
};

// syndrome-conditioned sum-product decoding, flooding schedule; prior_llr[i]
// is log P(e_i = 0) / P(e_i = 1)
BpResult sum_product_decode(const gf2::BinaryMatrix& h,
                            const std::vector<double>& prior_llr,
                            const gf2::BitVec& syndrome, int max_iters = 50);

std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials,
                                          double z = 1.959963984540054);

struct DepolarizingModel {
    double p = 0.0;   // X, Y, Z each with probability p/3
};

enum class DecoderKind { syndrome_table, sum_product };

struct SimOptions {
    int t_max = 1;
    int bp_max_iters = 50;
    int threads = 0;   // 0: EBW_THREADS env var, else hardware concurrency
};

struct SimResult {
    std::uint64_t trials = 0;
    std::uint64_t block_errors = 0;
    std::uint64_t x_failures = 0;   // first decoding step
    std::uint64_t z_failures = 0;   // second decoding step
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string decoder;
    std::string rng = "splitmix64";
    double rate = 0.0;
    double wilson_lo = 0.0, wilson_hi = 0.0;
};

// two independent decoding passes per trial (bit-flip and phase-flip
// components of a depolarizing error) against the same check matrix; a trial
// is a block error when either pass fails to reproduce its component exactly
SimResult simulate_depolarizing(const gf2::BinaryMatrix& h, DepolarizingModel model,
                                std::uint64_t trials, DecoderKind decoder,
                                std::uint64_t seed, SimOptions options = {});

} // namespace ebw::decode
