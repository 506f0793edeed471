#pragma once

#include <stdexcept>
#include <string>

namespace holder {

/// Input outside an operation's admissible domain (bad step, bad length, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an estimate cannot be formed, e.g. every scale in the fit window is zero.
class estimation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quadrature resolution too coarse for the requested coefficients.
class accuracy_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator was asked for more terms than fit below the frequency cap.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, int feasible)
        : std::runtime_error(what), feasible_(feasible) {}

    /// Largest parameter value that would have been accepted.
    int feasible() const noexcept { return feasible_; }

private:
    int feasible_;
};

} // namespace holder
