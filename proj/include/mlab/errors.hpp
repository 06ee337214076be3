#pragma once

#include <stdexcept>
#include <string>

namespace mlab {

// Iterative routine failed to converge or produced unusable output.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Distribution carries no usable probability mass (density below threshold everywhere).
class degenerate_distribution : public std::domain_error {
public:
    explicit degenerate_distribution(const std::string& what) : std::domain_error(what) {}
};

// Entropy curvature vanishes (or has the wrong sign): the Gaussian fluctuation
// model has a flat direction and is undefined there.
class flat_direction_error : public std::domain_error {
public:
    explicit flat_direction_error(const std::string& what) : std::domain_error(what) {}
};

// Ensemble cannot be normalized (potential does not confine).
class invalid_model : public std::domain_error {
public:
    explicit invalid_model(const std::string& what) : std::domain_error(what) {}
};

// A stated precondition of the call does not hold.
class precondition_error : public std::logic_error {
public:
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mlab
