#pragma once

#include <stdexcept>

namespace ebw {

// input violates a mathematical admissibility condition
struct AdmissibilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// malformed file contents
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// the requested computation cannot be carried out at this size/budget
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ebw
