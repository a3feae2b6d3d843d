#pragma once

#include <optional>

#include "ebw/gf2.hpp"

namespace ebw::tanner {

struct CycleReport {
    std::optional<int> girth;                // empty when the graph is acyclic
    long long four_cycles = 0;
    long long six_cycles = 0;
    std::optional<long long> predicted_six;  // closed form, when mu applies
};

bool has_four_cycle(const gf2::BinaryMatrix& h);
long long count_four_cycles(const gf2::BinaryMatrix& h);
// 3x3 submatrices with exactly two ones in every row and column
long long count_six_cycles(const gf2::BinaryMatrix& h);
std::optional<int> girth(const gf2::BinaryMatrix& h);

// expected six-cycle count for the incidence matrix of an index-one design
// with n blocks of uniform size mu; AdmissibilityError when no integer point
// count fits
long long predicted_six_cycles(long long n, long long mu);

CycleReport analyze_cycles(const gf2::BinaryMatrix& h,
                           std::optional<long long> mu = std::nullopt);

} // namespace ebw::tanner
