#pragma once

#include <string>

#include <json.hpp>

#include "holder/signal.hpp"
#include "holder/wavelet.hpp"

namespace holder {

/// Error while reading or writing a file (missing file, bad header, short payload).
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PayloadFormat { f64le, csv };

/// Signal on disk: the payload file plus a JSON sidecar at `<path>.json`
/// holding length, x0, dx, extension, format and generator provenance.
struct SignalFile {
    SampledSignal signal;
    nlohmann::json header;
};

void write_signal(const std::string& path, const SampledSignal& signal,
                  const nlohmann::json& provenance, PayloadFormat format = PayloadFormat::f64le);

/// Reads a signal. A CSV file (columns x,value) may come without a sidecar;
/// x0 and dx are then taken from its first two rows.
SignalFile read_signal(const std::string& path);

std::string sidecar_path(const std::string& path);

nlohmann::json pyramid_to_json(const CoeffPyramid& p);
CoeffPyramid pyramid_from_json(const nlohmann::json& j);

void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

/// True when the file parses as a JSON object carrying "scales".
bool looks_like_pyramid(const std::string& path);

} // namespace holder
