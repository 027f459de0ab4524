#pragma once

#include <stdexcept>

namespace qstat {

// Thrown when an oracle computation fails to converge. The CLI maps this to
// exit code 3; plain std::domain_error / std::invalid_argument map to 2.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qstat
