#ifndef LOSC_ERRORS_HPP
#define LOSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace losc {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// An iterative scheme exhausted its budget before reaching the requested tolerance.
class no_convergence : public std::runtime_error {
public:
    explicit no_convergence(const std::string& what) : std::runtime_error(what) {}
};

// A truncated state cannot represent the requested parameters to the required tail bound.
class truncation_error : public std::runtime_error {
public:
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// Operator dimension too small for the requested construction.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// An integrand produced NaN/Inf at an interior evaluation point.
class non_finite_error : public std::runtime_error {
public:
    explicit non_finite_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace losc

#endif  // LOSC_ERRORS_HPP
