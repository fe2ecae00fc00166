#pragma once

#include <stdexcept>
#include <string>

namespace octohls {

// Argument outside the mathematical domain (pole, nonpositive scale, range violation).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Input outside the supported function class (e.g. non-zonal where zonal is required).
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Caller-side contract violated (normalization, orthogonality constraint).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double residual_;
    int iterations_;
};

} // namespace octohls
