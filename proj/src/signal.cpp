#include "holder/signal.hpp"

#include <cmath>

#include "holder/errors.hpp"

namespace holder {

std::string to_string(Extension e) {
    return e == Extension::periodic ? "periodic" : "clamp";
}

Extension extension_from_string(const std::string& s) {
    if (s == "periodic") return Extension::periodic;
    if (s == "clamp") return Extension::clamp;
    throw domain_error("unknown extension rule '" + s + "'");
}

SampledSignal::SampledSignal(std::vector<double> values, double x0, double dx, Extension extension)
    : values_(std::move(values)), x0_(x0), dx_(dx), extension_(extension) {
    if (values_.size() < 2)
        throw domain_error("a sampled signal needs at least two samples");
    if (!(dx_ > 0.0) || !std::isfinite(dx_))
        throw domain_error("grid step must be positive and finite");
    if (!std::isfinite(x0_))
        throw domain_error("domain origin must be finite");
    for (double v : values_)
        if (!std::isfinite(v))
            throw domain_error("signal samples must be finite");
}

SampledSignal SampledSignal::with_extension(Extension e) const {
    SampledSignal copy = *this;
    copy.extension_ = e;
    return copy;
}

} // namespace holder
