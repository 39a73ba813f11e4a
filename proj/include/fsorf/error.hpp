// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fsorf {

/// Base class for every numeric failure raised by the library.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument lies on a pole of the gamma function.
class pole_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// No vertical line separates the left and right pole families of a kernel.
class contour_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// Quadrature did not reach its tolerance within the node budget.
class convergence_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// An asymptotic residue expansion hit a higher-order pole (Γ(0) in a numerator product).
class degenerate_expansion_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// A closed form produced a probability outside [0, 1]. The raw value is kept for reporting.
class out_of_range_result : public numeric_error {
public:
    out_of_range_result(const std::string& what, double value)
        : numeric_error(what + " (value " + std::to_string(value) + ")"), value_(value) {}

    double value() const noexcept { return value_; }

private:
    double value_;
};

/// Precondition check; violations are caller errors.
inline void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}
}  // namespace fsorf
