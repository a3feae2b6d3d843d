#pragma once

#include <optional>
#include <vector>

#include "ebw/design.hpp"
#include "ebw/gf2.hpp"

namespace ebw::evenfree {

struct EvenFreeReport {
    int cap = 0;
    // largest size s such that "no even configuration of <= s blocks" is certified
    int max_verified_r = 0;
    // block indices of a minimum even configuration, when one was found within
    // the cap; lexicographically least when the search ran to completion
    std::optional<std::vector<int>> witness;
    bool complete = true;          // false when the node budget ran out
    long long nodes = 0;
};

// smallest even configuration (every point covered an even number of times)
// of at most `cap` blocks; design must have passed structural verification
EvenFreeReport min_even_configuration(const designs::Design& d, int cap,
                                      long long node_budget = 1'000'000'000);

// number of Pasch configurations in a Steiner triple system
long long count_pasch(const designs::Design& d);

// minimum number of columns of h with zero XOR; empty optional means "> cap"
std::optional<int> classical_min_distance(const gf2::BinaryMatrix& h, int cap);

} // namespace ebw::evenfree
