#include "holder/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "holder/errors.hpp"
#include "holder/io.hpp"
#include "holder/report.hpp"
#include "holder/smoothness.hpp"
#include "holder/verify.hpp"
#include "holder/zoo.hpp"

namespace holder {

using nlohmann::json;

namespace {

/// Bad flag values that CLI11 cannot catch on its own.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

long parse_long(const std::string& s) {
    long v = 0;
    const auto* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end) throw usage_error("not an integer: '" + s + "'");
    return v;
}

ScaleWindow parse_window(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw usage_error("window must look like jmin:jmax, got '" + s + "'");
    const ScaleWindow w{static_cast<int>(parse_long(s.substr(0, colon))),
                        static_cast<int>(parse_long(s.substr(colon + 1)))};
    if (w.empty()) throw usage_error("empty window '" + s + "'");
    return w;
}

std::optional<int> parse_order(const std::string& s) {
    if (s == "auto") return std::nullopt;
    const long m = parse_long(s);
    if (m < 1 || m > 10) throw usage_error("--M must be auto or an integer in 1..10");
    return static_cast<int>(m);
}

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

json run_provenance(const std::string& command) {
    return {{"tool", "holder"}, {"version", tool_version}, {"command", command}, {"generated_at", utc_now()}};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << text;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

unsigned file_workers(std::size_t jobs) {
    return static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(jobs, 1)));
}

// ---- gen ----

struct GenFlags {
    std::string output;
    std::string n = "2^16";
    std::optional<double> x0, dx;
    std::string extension = "periodic";
    std::string payload = "f64";
    double alpha = 0.5, eps = 0.5, growth = 2.0, a = std::sqrt(0.5);
    int b = 2, terms = 0, ell0 = 3, blocks = 3, moments = 4, cap = 30, nmax = 3, jcap = 30, jmax = 24;
    std::string pattern = "alternating";
};

Grid make_grid(const GenFlags& f) {
    Grid g;
    const long n = parse_count(f.n);
    if (n < 2) throw usage_error("--n must be at least 2");
    g.n = static_cast<std::size_t>(n);
    g.x0 = f.x0.value_or(0.0);
    g.dx = f.dx.value_or(2.0 / static_cast<double>(n));
    if (!(g.dx > 0.0)) throw usage_error("--dx must be positive");
    g.extension = extension_from_string(f.extension);
    return g;
}

PayloadFormat payload_format(const std::string& s) {
    if (s == "f64") return PayloadFormat::f64le;
    if (s == "csv") return PayloadFormat::csv;
    throw usage_error("--payload must be f64 or csv");
}

json grid_json(const Grid& g) {
    return {{"n", g.n}, {"x0", g.x0}, {"dx", g.dx}, {"extension", to_string(g.extension)}};
}

int gen_weierstrass(const GenFlags& f) {
    const Grid grid = make_grid(f);
    const int terms = f.terms > 0 ? f.terms : weierstrass_default_terms(f.a);
    const auto w = weierstrass(f.a, f.b, terms, grid);
    const json prov = {{"generator", "weierstrass"},
                       {"params", {{"a", f.a}, {"b", f.b}, {"terms", terms}}},
                       {"grid", grid_json(grid)},
                       {"predicted_index", w.predicted_index},
                       {"warnings", w.warnings}};
    write_signal(f.output, w.signal, prov, payload_format(f.payload));
    for (const auto& m : w.warnings) std::cerr << "warning: " << m << "\n";
    std::cout << json{{"output", f.output}, {"length", w.signal.size()}, {"provenance", prov}}.dump(1) << "\n";
    return exit_ok;
}

int gen_cex1(const GenFlags& f) {
    const Grid grid = make_grid(f);
    Cex1Params p;
    p.alpha = f.alpha;
    p.epsilon = f.eps;
    p.ell0 = f.ell0;
    p.truncation_n = f.blocks;
    p.vanishing_moments = f.moments;
    p.frequency_cap = f.cap;
    const Cex1Function fn(p);
    const SampledSignal sig = sample(fn, grid.n, grid.x0, grid.dx, grid.extension);
    const json prov = {{"generator", "cex1"},
                       {"params",
                        {{"alpha", p.alpha},
                         {"epsilon", p.epsilon},
                         {"ell0", p.ell0},
                         {"blocks", p.truncation_n},
                         {"vanishing_moments", p.vanishing_moments},
                         {"frequency_cap", p.frequency_cap}}},
                       {"grid", grid_json(grid)},
                       {"j_n", fn.sequences().j},
                       {"j_n_alpha", fn.sequences().j_alpha},
                       {"psi_shift", fn.shift()},
                       {"psi_tilde_0", fn.psi0()},
                       {"beta", cex1_beta(p.alpha, p.epsilon)}};
    write_signal(f.output, sig, prov, payload_format(f.payload));
    std::cout << json{{"output", f.output}, {"length", sig.size()}, {"provenance", prov}}.dump(1) << "\n";
    return exit_ok;
}

int gen_fabe(const GenFlags& f) {
    const Grid grid = make_grid(f);
    FabeParams p;
    p.alpha = f.alpha;
    p.epsilon = f.eps;
    p.beta_growth = f.growth;
    p.n_max = f.nmax;
    p.j_cap = f.jcap;
    const FabeSignal s = fabe_signal(p, grid);
    const std::vector<long> heads(s.series.j.begin() + 1, s.series.j.end());
    const json prov = {{"generator", "fabe"},
                       {"params",
                        {{"alpha", p.alpha},
                         {"epsilon", p.epsilon},
                         {"growth", p.beta_growth},
                         {"n_max", p.n_max},
                         {"j_cap", p.j_cap}}},
                       {"grid", grid_json(grid)},
                       {"j_0", s.series.j.front()},
                       {"j_n", heads},
                       {"terms", s.series.series.terms().size()}};
    write_signal(f.output, s.signal, prov, payload_format(f.payload));
    std::cout << json{{"output", f.output}, {"length", s.signal.size()}, {"provenance", prov}}.dump(1) << "\n";
    return exit_ok;
}

int gen_gap_pyramid(const GenFlags& f) {
    if (f.jmax < 0 || f.jmax > 60) throw usage_error("--jmax must lie in 0..60");
    std::vector<char> alive;
    if (f.pattern == "alternating")
        alive = alternating_pattern(f.jmax);
    else if (f.pattern == "dyadic")
        alive = dyadic_heads_pattern(f.jmax);
    else if (f.pattern == "all")
        alive.assign(static_cast<std::size_t>(f.jmax) + 1, 1);
    else
        throw usage_error("--pattern must be alternating, dyadic or all");
    json j = pyramid_to_json(gap_pyramid(f.alpha, alive));
    j["provenance"] = {{"generator", "gap-pyramid"},
                       {"params", {{"alpha", f.alpha}, {"pattern", f.pattern}, {"j_max", f.jmax}}}};
    write_json(f.output, j);
    std::cout << json{{"output", f.output}, {"scales", f.jmax + 1}, {"provenance", j["provenance"]}}.dump(1)
              << "\n";
    return exit_ok;
}

// ---- analyze / criterion ----

struct AnalyzeFlags {
    std::vector<std::string> inputs;
    std::string output;
    std::string wavelet = "daubechies:4";
    std::string M = "auto";
    std::string oracle_M = "auto";
    std::string window, oracle_window;
    std::vector<double> alphas;
    bool no_oracle = false;
    bool keep_seam = false;
    bool comparable_only = false;
    std::string format = "json";
};

AnalyzeOptions analyze_options(const AnalyzeFlags& f) {
    AnalyzeOptions o;
    o.wavelet = f.wavelet;
    WaveletSpec::parse(o.wavelet);
    o.M = parse_order(f.M);
    o.oracle_M = parse_order(f.oracle_M);
    if (!f.window.empty()) o.window = parse_window(f.window);
    if (!f.oracle_window.empty()) o.oracle_window = parse_window(f.oracle_window);
    o.oracle = !f.no_oracle;
    o.exclude_seam = !f.keep_seam;
    o.witness_alphas = f.alphas;
    for (double a : o.witness_alphas)
        if (!(a > 0.0)) throw usage_error("--alpha values must be positive");
    return o;
}

void check_format(const std::string& format) {
    if (format != "json" && format != "csv") throw usage_error("--format must be json or csv");
}

/// A parsed input: either a pyramid or a signal.
struct Input {
    std::optional<CoeffPyramid> pyramid;
    std::optional<SignalFile> signal;
};

Input load_input(const std::string& path) {
    if (!std::ifstream(path)) throw io_error("cannot open " + path);
    Input in;
    if (looks_like_pyramid(path))
        in.pyramid = pyramid_from_json(read_json(path));
    else
        in.signal = read_signal(path);
    return in;
}

AnalysisReport analyze_input(const Input& in, const std::string& path, const AnalyzeOptions& o) {
    AnalysisReport r = in.pyramid ? analyze_pyramid(*in.pyramid, o) : analyze_signal(in.signal->signal, o);
    r.input["path"] = path;
    if (in.signal && !in.signal->header.value("provenance", json::object()).empty())
        r.input["generator"] = in.signal->header["provenance"];
    return r;
}

std::string estimates_csv(const std::vector<AnalysisReport>& reports, const std::vector<std::string>& paths) {
    std::ostringstream os;
    os << "input,estimate,value,fit_lo,fit_hi,M\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        auto row = [&](const char* name, const std::optional<IndexEstimate>& e, int M) {
            os << paths[i] << "," << name << ",";
            if (e)
                os << fmt(e->value) << "," << e->fit_window.lo << "," << e->fit_window.hi;
            else
                os << ",,";
            os << "," << M << "\n";
        };
        row("wavelet_lower", r.wavelet_lower, r.M);
        row("wavelet_upper", r.wavelet_upper, r.M);
        row("oracle_lower", r.oracle_lower, r.oracle_M.value_or(0));
        row("oracle_upper", r.oracle_upper, r.oracle_M.value_or(0));
    }
    return os.str();
}

int cmd_analyze(const AnalyzeFlags& f, const std::string& command) {
    check_format(f.format);
    const AnalyzeOptions opts = analyze_options(f);
    const std::size_t count = f.inputs.size();

    std::vector<std::optional<AnalysisReport>> reports(count);
    std::vector<std::string> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                reports[i] = analyze_input(load_input(f.inputs[i]), f.inputs[i], opts);
            } catch (const std::exception& e) {
                errors[i] = f.inputs[i] + ": " + e.what();
            }
        }
    };
    const unsigned workers = file_workers(count);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    bool failed = false;
    for (const auto& e : errors)
        if (!e.empty()) {
            std::cerr << "error: " << e << "\n";
            failed = true;
        }
    if (failed) return exit_usage;

    std::vector<AnalysisReport> done;
    bool degenerate = false;
    for (auto& r : reports) {
        r->provenance = run_provenance(command);
        degenerate = degenerate || r->degenerate();
        done.push_back(std::move(*r));
    }
    if (f.format == "csv") {
        emit(estimates_csv(done, f.inputs), f.output);
    } else {
        json out = json::array();
        for (const auto& r : done) out.push_back(f.comparable_only ? comparable(to_json(r)) : to_json(r));
        emit((count == 1 ? out[0] : out).dump(1) + "\n", f.output);
    }
    for (const auto& r : done)
        for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    return degenerate ? exit_degenerate : exit_ok;
}

int cmd_criterion(const AnalyzeFlags& f) {
    check_format(f.format);
    if (f.inputs.size() != 1) throw usage_error("criterion takes exactly one input");
    const AnalyzeOptions o = analyze_options(f);
    const Input in = load_input(f.inputs[0]);
    const CoeffPyramid pyr =
        in.pyramid ? *in.pyramid
                   : signal_pyramid(in.signal->signal, WaveletSpec::parse(o.wavelet), o.exclude_seam);
    const int M = o.M.value_or(auto_criterion_order(pyr, o.window, o.rule));
    const CriterionTrace t = irregularity_criterion(pyr, M);
    if (f.format == "csv") {
        std::ostringstream os;
        os << "j,s_j,tail_sup,head_sup,value\n";
        for (std::size_t i = 0; i < t.j.size(); ++i)
            os << t.j[i] << "," << fmt(pyr.sup(t.j[i])) << "," << fmt(t.tail_sup[i]) << ","
               << fmt(t.head_sup[i]) << "," << fmt(t.value[i]) << "\n";
        emit(os.str(), f.output);
    } else {
        json out = to_json(t);
        out["input"] = f.inputs[0];
        out["s_j"] = pyr.sup_per_scale();
        emit(out.dump(1) + "\n", f.output);
    }
    return exit_ok;
}

// ---- verify ----

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& output) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string all;
        for (const auto& n : names) all += (all.empty() ? "" : ", ") + n;
        throw usage_error("unknown suite '" + suite + "' (known: " + all + ")");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = run_suite(suite, seed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json out = r.to_json();
    out["seconds"] = secs;
    emit(out.dump(1) + "\n", output);
    return r.passed() ? exit_ok : 1;
}

std::string joined(int argc, const char* const* argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
    return s;
}

} // namespace

long parse_count(const std::string& s) {
    const auto caret = s.find('^');
    if (caret == std::string::npos) return parse_long(s);
    const long base = parse_long(s.substr(0, caret));
    const long exp = parse_long(s.substr(caret + 1));
    if (base < 1 || exp < 0) throw usage_error("bad count '" + s + "'");
    long v = 1;
    for (long i = 0; i < exp; ++i) {
        if (v > std::numeric_limits<long>::max() / base) throw usage_error("count '" + s + "' overflows");
        v *= base;
    }
    return v;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Global Hölder index estimation from wavelet coefficients", "holder"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    GenFlags g;
    auto* gen = app.add_subcommand("gen", "Generate a test signal or pyramid");
    gen->require_subcommand(1);
    auto add_grid = [&g](CLI::App* c) {
        c->add_option("-o,--output", g.output, "Output path")->required();
        c->add_option("--n", g.n, "Number of samples, e.g. 65536 or 2^16");
        c->add_option("--x0", g.x0, "First sample position");
        c->add_option("--dx", g.dx, "Sample step (default 2/n)");
        c->add_option("--extension", g.extension, "periodic or clamp");
        c->add_option("--payload", g.payload, "f64 or csv");
    };
    auto* w = gen->add_subcommand("weierstrass", "sum a^n cos(b^n pi x)");
    add_grid(w);
    w->add_option("--a", g.a, "Amplitude ratio in (0,1)");
    w->add_option("--b", g.b, "Integer frequency ratio >= 2");
    w->add_option("--terms", g.terms, "Number of terms (default: until a^n < 1e-12)");
    auto* c1 = gen->add_subcommand("cex1", "Rearranged-wavelet counterexample");
    add_grid(c1);
    c1->add_option("--alpha", g.alpha);
    c1->add_option("--eps", g.eps);
    c1->add_option("--ell0", g.ell0);
    c1->add_option("--blocks", g.blocks, "Number of blocks");
    c1->add_option("--vanishing-moments", g.moments);
    c1->add_option("--cap", g.cap, "Finest scale");
    auto* fb = gen->add_subcommand("fabe", "Lacunary trigonometric series");
    add_grid(fb);
    fb->add_option("--alpha", g.alpha);
    fb->add_option("--eps", g.eps);
    fb->add_option("--growth", g.growth);
    fb->add_option("--nmax", g.nmax);
    fb->add_option("--jcap", g.jcap, "Highest frequency exponent kept");
    auto* gp = gen->add_subcommand("gap-pyramid", "Synthetic coefficient pyramid with dead scales");
    gp->add_option("-o,--output", g.output, "Output path")->required();
    gp->add_option("--alpha", g.alpha, "Envelope exponent");
    gp->add_option("--pattern", g.pattern, "alternating, dyadic or all");
    gp->add_option("--jmax", g.jmax);

    AnalyzeFlags af;
    auto add_analysis = [&af](CLI::App* c) {
        c->add_option("-o,--output", af.output, "Output path (default stdout)");
        c->add_option("--wavelet", af.wavelet, "daubechies:N or meyer");
        c->add_option("--M", af.M, "Criterion order: auto or an integer");
        c->add_option("--window", af.window, "Wavelet fit window jmin:jmax");
        c->add_option("--format", af.format, "json or csv");
        c->add_flag("--keep-seam", af.keep_seam, "Keep coefficients whose filters wrap around");
    };
    auto* an = app.add_subcommand("analyze", "Estimate the global indices of signals or pyramids");
    an->add_option("inputs", af.inputs, "Signal files or pyramid JSON")->required();
    add_analysis(an);
    an->add_option("--oracle-M", af.oracle_M, "Modulus order: auto or an integer");
    an->add_option("--oracle-window", af.oracle_window, "Oracle fit window jmin:jmax");
    an->add_flag("--no-oracle", af.no_oracle, "Skip the modulus-of-smoothness oracle");
    an->add_option("--alpha", af.alphas, "Exponents for the witness search");
    an->add_flag("--comparable", af.comparable_only, "Omit the provenance block");

    auto* cr = app.add_subcommand("criterion", "Dump the irregularity criterion per scale");
    cr->add_option("input", af.inputs, "Signal file or pyramid JSON")->required();
    add_analysis(cr);

    std::string suite;
    std::uint64_t seed = 1234567;
    std::string verify_out;
    auto* vf = app.add_subcommand("verify", "Run a named verification suite");
    vf->add_option("suite", suite, "theta, criterion-equivalence, meyer, cex1, fabe or monofractal")->required();
    vf->add_option("--seed", seed);
    vf->add_option("-o,--output", verify_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    const std::string command = joined(argc, argv);
    try {
        if (w->parsed()) return gen_weierstrass(g);
        if (c1->parsed()) return gen_cex1(g);
        if (fb->parsed()) return gen_fabe(g);
        if (gp->parsed()) return gen_gap_pyramid(g);
        if (an->parsed()) return cmd_analyze(af, command);
        if (cr->parsed()) return cmd_criterion(af);
        if (vf->parsed()) return cmd_verify(suite, seed, verify_out);
    } catch (const truncation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const estimation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_degenerate;
    }
    return exit_usage;
}

} // namespace holder
