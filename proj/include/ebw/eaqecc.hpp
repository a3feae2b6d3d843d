#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebw/gf2.hpp"
#include "ebw/tanner.hpp"

namespace ebw::eaqecc {

struct QuantumDistance {
    enum class Status { value, degenerate, above_cap, infeasible };
    Status status = Status::infeasible;
    int d = 0;   // meaningful only for status == value
};

struct EaqeccParams {
    std::size_t n = 0;           // physical qubits (columns)
    std::size_t rank = 0;        // GF(2) rank of the check matrix
    std::size_t classical_k = 0; // n - rank
    std::size_t c = 0;           // ebits: rank of H H^T
    long long quantum_k = 0;     // 2 classical_k - n + c
    bool one_ebit = false;
    tanner::CycleReport cycles;
    std::optional<int> classical_d;  // empty means "> distance_cap"
    int distance_cap = 0;
    std::optional<QuantumDistance> quantum_d;
};

// full parameter readout; throws AdmissibilityError on zero rows or columns
EaqeccParams characterize(const gf2::BinaryMatrix& h, int distance_cap = 8,
                          bool with_quantum_d = false);

struct OneEbitCheck {
    bool ok = false;
    // first violated condition: 1 = some row pair does not share exactly one
    // column, 2 = some row weight even or < 3, 3 = some column weight < 2
    int condition = 0;
    long long witness_a = -1, witness_b = -1;
    std::string detail;
};

OneEbitCheck one_ebit_structure_check(const gf2::BinaryMatrix& h);

// does h present column-wise as a nontrivial index-one pairwise balanced
// design with odd point replication and all blocks of size > 1
bool pbd_equivalence_check(const gf2::BinaryMatrix& h);

struct RegularAdmissibility {
    bool admissible = false;             // integer point count, odd replication
    std::optional<long long> v;          // point count when integral
    std::optional<long long> replication;
};

RegularAdmissibility regular_admissibility(long long n, long long mu);

struct StsKWindow {
    long long k_lower = 0, k_upper = 0;
    int t = 0;
    long long u = 0;
};

struct BoundViolation {
    std::string bound;
    long long predicted_lo = 0, predicted_hi = 0;
    long long computed = 0;
};

struct BoundsReport {
    long long n = 0;
    std::optional<long long> mu;         // uniform column weight, when present
    std::optional<long long> v;
    bool odd_replication_admissible = false;
    std::optional<long long> hillebrandt_rank_lower;
    std::optional<long long> k_lower_raw;   // may be negative
    std::optional<long long> k_lower;       // clamped at zero
    std::optional<long long> k_upper;
    std::optional<StsKWindow> sts_window;   // mu = 3 refinement
    std::optional<long long> computed_rank;
    std::optional<long long> computed_k;
    std::vector<BoundViolation> violations;
    bool consistent = true;
};

// arithmetic-only bounds from the code length and uniform check weight
BoundsReport dimension_bounds(long long n, long long mu);
// bounds plus computed rank/dimension and consistency audit
BoundsReport audit_bounds(const gf2::BinaryMatrix& h);

// minimum weight over codewords of ker h outside the row space of h;
// exhaustive when the code dimension is at most enum_limit, otherwise a
// weight-capped search
QuantumDistance quantum_min_distance(const gf2::BinaryMatrix& h, int cap = 8,
                                     int enum_limit = 22);

} // namespace ebw::eaqecc
