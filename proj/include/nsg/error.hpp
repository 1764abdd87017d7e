#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

// Root of every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied arguments outside an operation's domain.
class precondition_error : public error {
public:
    using error::error;
};

// Evaluation at a point where the function has a pole (e.g. H_S at x = 1).
class domain_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

// A closed form disagreed with itself or with the oracle it is meant to match.
class theorem_violation : public error {
public:
    using error::error;
};

// Internal consistency check failed; indicates a bug or corrupted input data.
class invariant_violation : public error {
public:
    using error::error;
};

class overflow_error : public error {
public:
    using error::error;
};

// Floating evaluation landed too far from an integer.
class numerical_failure : public error {
public:
    numerical_failure(const std::string& what, double residual)
        : error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace nsg
