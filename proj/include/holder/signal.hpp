#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace holder {

/// How samples are continued past the right end of the window.
///
/// `periodic` wraps indices modulo the length. `clamp` does not extend the
/// signal at all: differences are only formed where the whole stencil lies
/// inside the sampled window.
enum class Extension { periodic, clamp };

std::string to_string(Extension e);
Extension extension_from_string(const std::string& s);

/// Uniform samples f(x0 + i*dx), i = 0..n-1, of a bounded function on an interval.
class SampledSignal {
public:
    SampledSignal(std::vector<double> values, double x0, double dx,
                  Extension extension = Extension::periodic);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double x0() const noexcept { return x0_; }
    double dx() const noexcept { return dx_; }
    Extension extension() const noexcept { return extension_; }
    double x(std::size_t i) const noexcept { return x0_ + static_cast<double>(i) * dx_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    SampledSignal with_extension(Extension e) const;

private:
    std::vector<double> values_;
    double x0_;
    double dx_;
    Extension extension_;
};

/// Samples `f` on n points starting at x0 with step dx.
template <class F>
SampledSignal sample(F&& f, std::size_t n, double x0, double dx,
                     Extension extension = Extension::periodic) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = f(x0 + static_cast<double>(i) * dx);
    return SampledSignal(std::move(v), x0, dx, extension);
}

} // namespace holder
