#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ebw/gf2.hpp"

namespace ebw::designs {

// point set is always {0, ..., v-1}
struct Design {
    int v = 0;
    std::vector<std::vector<int>> blocks;

    // sort points within blocks, then blocks lexicographically
    void canonicalize();
    bool operator==(const Design&) const = default;
};

struct PbdReport {
    bool structurally_valid = true;
    std::string structural_error;      // names the offending block
    int offending_block = -1;

    bool is_pbd = false;
    // when !is_pbd: least point pair with coverage != 1, and its coverage
    std::optional<std::pair<int, int>> counterexample_pair;
    int counterexample_coverage = 0;

    std::set<int> block_sizes;         // K
    std::vector<int> replication;      // per point
    bool equireplicate = false;
    int replication_number = -1;       // when equireplicate
    bool odd_replicate = false;
    bool is_steiner = false;           // single block size, index one
    bool is_trivial = false;           // no blocks, or one block holding every point
};

PbdReport verify_pbd(const Design& d);

// rows = points, columns = blocks
gf2::BinaryMatrix incidence_matrix(const Design& d);

// Bose (v = 3 mod 6) / Skolem (v = 1 mod 6) triple systems
Design construct_sts(int v);
// lines of the binary projective geometry on 2^m - 1 points;
// point i is the nonzero vector with binary value i + 1
Design construct_pg_lines(int m);
// lines of the affine geometry AG(m, q); point index is the base-q value of
// its coordinate vector (lexicographic)
Design construct_ag_lines(int m, int q);
// point-line design of the projective plane of order q; points are the
// normalized homogeneous triples over GF(q) (leftmost nonzero coordinate 1)
// in lexicographic order
Design construct_projective_plane(int q);

struct DivisibilityCheck {
    long long alpha = 0, beta = 0;
    bool point_condition = false;   // alpha | v - 1
    bool pair_condition = false;    // beta | v (v - 1)
    bool admissible = false;
};

DivisibilityCheck pbd_necessary_conditions(long long v, const std::set<int>& block_sizes);

} // namespace ebw::designs
