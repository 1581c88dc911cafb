#pragma once

#include <stdexcept>
#include <string>

namespace knapsack {

struct UnknownDistribution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidProbabilities : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingTypicalParams : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised when the density vanishes at the point where the implicit-function
// formula for the consumption derivative is evaluated.
struct DegenerateDensity : std::domain_error {
    using std::domain_error::domain_error;
};

struct DegeneratePartialMoment : std::domain_error {
    using std::domain_error::domain_error;
};

struct GridTooCoarse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace knapsack
