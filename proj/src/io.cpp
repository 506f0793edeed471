#include "holder/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "holder/errors.hpp"

namespace holder {

using nlohmann::json;

std::string sidecar_path(const std::string& path) { return path + ".json"; }

namespace {

void write_f64le(std::ofstream& out, std::span<const double> values) {
    for (double v : values) {
        std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
        unsigned char bytes[8];
        for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xff);
        out.write(reinterpret_cast<const char*>(bytes), 8);
    }
}

std::vector<double> read_f64le(const std::string& path, std::size_t n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned char bytes[8];
        if (!in.read(reinterpret_cast<char*>(bytes), 8))
            throw io_error(path + ": payload holds fewer than the " + std::to_string(n) +
                           " samples announced by the header");
        std::uint64_t bits = 0;
        for (int b = 0; b < 8; ++b) bits |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
        v[i] = std::bit_cast<double>(bits);
    }
    if (in.peek() != std::char_traits<char>::eof())
        throw io_error(path + ": payload is longer than the header length");
    return v;
}

struct CsvData {
    std::vector<double> x, v;
};

CsvData read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    CsvData d;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw io_error(path + ":" + std::to_string(lineno) + ": expected x,value");
        const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
        if (lineno == 1 && a == "x") continue;
        try {
            d.x.push_back(std::stod(a));
            d.v.push_back(std::stod(b));
        } catch (const std::exception&) {
            throw io_error(path + ":" + std::to_string(lineno) + ": not a number");
        }
    }
    return d;
}

bool file_exists(const std::string& path) { return static_cast<bool>(std::ifstream(path)); }

} // namespace

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io_error(path + ": " + e.what());
    }
}

void write_signal(const std::string& path, const SampledSignal& signal, const json& provenance,
                  PayloadFormat format) {
    json header = {{"length", signal.size()},
                   {"x0", signal.x0()},
                   {"dx", signal.dx()},
                   {"extension", to_string(signal.extension())},
                   {"format", format == PayloadFormat::f64le ? "f64le" : "csv"},
                   {"provenance", provenance}};
    if (format == PayloadFormat::f64le) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw io_error("cannot write " + path);
        write_f64le(out, signal.values());
    } else {
        std::ofstream out(path);
        if (!out) throw io_error("cannot write " + path);
        out.precision(17);
        out << "x,value\n";
        for (std::size_t i = 0; i < signal.size(); ++i) out << signal.x(i) << ',' << signal[i] << '\n';
    }
    write_json(sidecar_path(path), header);
}

SignalFile read_signal(const std::string& path) {
    const std::string side = sidecar_path(path);
    const bool is_csv = path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
    if (!file_exists(side)) {
        if (!is_csv) throw io_error(path + ": missing sidecar " + side);
        auto d = read_csv(path);
        if (d.x.size() < 2) throw io_error(path + ": need at least two samples");
        const double dx = d.x[1] - d.x[0];
        json header = {{"length", d.v.size()}, {"x0", d.x[0]}, {"dx", dx},
                       {"extension", "periodic"}, {"format", "csv"}, {"provenance", json::object()}};
        return {SampledSignal(std::move(d.v), d.x[0], dx), header};
    }
    json header = read_json(side);
    try {
        const auto n = header.at("length").get<std::size_t>();
        const double x0 = header.at("x0").get<double>();
        const double dx = header.at("dx").get<double>();
        const Extension ext = extension_from_string(header.value("extension", std::string("periodic")));
        const std::string fmt = header.value("format", std::string(is_csv ? "csv" : "f64le"));
        std::vector<double> v;
        if (fmt == "f64le") {
            v = read_f64le(path, n);
        } else if (fmt == "csv") {
            v = read_csv(path).v;
            if (v.size() != n)
                throw io_error(path + ": header length " + std::to_string(n) + " but " +
                               std::to_string(v.size()) + " rows");
        } else {
            throw io_error(side + ": unknown payload format '" + fmt + "'");
        }
        return {SampledSignal(std::move(v), x0, dx, ext), header};
    } catch (const json::exception& e) {
        throw io_error(side + ": " + e.what());
    }
}

json pyramid_to_json(const CoeffPyramid& p) {
    json scales = json::array();
    for (const auto& sc : p.scales()) {
        json s = {{"j", sc.j}, {"coeffs", sc.coeffs}, {"sup", sc.sup}};
        if (sc.k_first != 0 || sc.k_stride != 1) {
            s["k_first"] = sc.k_first;
            s["k_stride"] = sc.k_stride;
        }
        if (std::find(sc.excluded.begin(), sc.excluded.end(), 1) != sc.excluded.end()) {
            std::vector<int> ex(sc.excluded.begin(), sc.excluded.end());
            s["excluded"] = ex;
        }
        scales.push_back(std::move(s));
    }
    return {{"j_min", p.empty() ? 0 : p.j_min()},
            {"j_max", p.empty() ? -1 : p.j_max()},
            {"normalization", p.normalization()},
            {"scales", scales}};
}

CoeffPyramid pyramid_from_json(const json& j) {
    try {
        if (j.contains("normalization") && j.at("normalization") != "Linf")
            throw domain_error("only the Linf normalization is supported");
        std::vector<ScaleCoeffs> scales;
        for (const auto& s : j.at("scales")) {
            ScaleCoeffs sc;
            sc.j = s.at("j").get<int>();
            if (s.contains("coeffs"))
                sc.coeffs = s.at("coeffs").get<std::vector<double>>();
            else
                sc.coeffs = {s.at("sup").get<double>()};
            sc.k_first = s.value("k_first", 0L);
            sc.k_stride = s.value("k_stride", 1L);
            if (s.contains("excluded")) {
                const auto ex = s.at("excluded").get<std::vector<int>>();
                sc.excluded.assign(ex.begin(), ex.end());
            }
            scales.push_back(std::move(sc));
        }
        if (scales.empty()) throw domain_error("pyramid has no scales");
        return CoeffPyramid(std::move(scales));
    } catch (const json::exception& e) {
        throw io_error(std::string("bad pyramid JSON: ") + e.what());
    }
}

bool looks_like_pyramid(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    const auto j = json::parse(in, nullptr, false);
    return !j.is_discarded() && j.is_object() && j.contains("scales");
}

} // namespace holder
