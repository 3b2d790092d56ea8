// Command-line driver: per-edge curvature reports, (n, m) gluing sweeps,
// theorem verification, and spectral/Cheeger reports, in CSV, JSON, or
// plain text. Exit codes: 0 success, 1 verification counterexample,
// 2 usage or input error.

#include "ricci/curvature.hpp"
#include "ricci/edge_list_io.hpp"
#include "ricci/gluing.hpp"
#include "ricci/graph.hpp"
#include "ricci/spectral.hpp"
#include "ricci/transport.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;
using namespace ricci;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

enum class Format { Csv, Json, Text };

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "text") return Format::Text;
    throw ParseError("unknown format: " + s);
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json rational_json(const Rational& r) {
    return {{"num", numerator(r).convert_to<long long>()},
            {"den", denominator(r).convert_to<long long>()}};
}

struct IntRange {
    int lo = 0;
    int hi = 0;
};

// "a..b" or a single "a".
IntRange parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        IntRange r{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
        if (r.lo > r.hi) throw ParseError("empty range: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed range: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("malformed range: " + s);
    }
}

// "n=6,m=5"
GluingSpec parse_gluing(const std::string& s) {
    GluingSpec spec;
    bool have_n = false, have_m = false;
    std::istringstream in(s);
    std::string field;
    while (std::getline(in, field, ',')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in --gluing");
        std::string key = field.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(field.substr(eq + 1));
        } catch (...) {
            throw ParseError("bad integer in --gluing: " + field);
        }
        if (key == "n") {
            spec.n = value;
            have_n = true;
        } else if (key == "m") {
            spec.m = value;
            have_m = true;
        } else {
            throw ParseError("unknown --gluing key: " + key);
        }
    }
    if (!have_n || !have_m) throw ParseError("--gluing needs both n= and m=");
    return spec;
}

struct GraphSource {
    std::string input_path;   // edge-list file
    std::string gluing_expr;  // "n=..,m=.."

    Graph load() const {
        if (!gluing_expr.empty()) {
            return build_gluing(parse_gluing(gluing_expr));
        }
        auto edges = read_edge_list_file(input_path);
        return build_graph(edges);
    }
};

// Output sink: a file path or "-" for stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw ParseError("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// Runs jobs 0..count-1 on `jobs` threads; each job writes only its own
// result slot, so aggregation order never depends on the schedule.
void run_parallel(int jobs, size_t count, const std::function<void(size_t)>& work) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (jobs == 1) {
        for (size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                work(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------- curvature

int run_curvature(const GraphSource& source, Format format, Sink& sink) {
    Graph g = source.load();
    struct Row {
        CurvatureReport report;
    };
    std::vector<Row> rows;
    rows.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        rows.push_back({ricci_curvature(g, u, v)});
    }

    std::ostream& out = sink.out();
    switch (format) {
        case Format::Csv: {
            out << "x,y,kappa_num,kappa_den,jl_lower,jl_upper,W_num,W_den\n";
            for (const auto& [r] : rows) {
                out << r.x << "," << r.y << "," << numerator(r.kappa) << ","
                    << denominator(r.kappa) << "," << to_string(*r.jl_lower) << ","
                    << to_string(*r.jl_upper) << "," << numerator(r.wasserstein) << ","
                    << denominator(r.wasserstein) << "\n";
            }
            break;
        }
        case Format::Json: {
            json doc;
            doc["schema"] = 1;
            doc["command"] = "curvature";
            json out_rows = json::array();
            for (const auto& [r] : rows) {
                out_rows.push_back({{"x", r.x},
                                    {"y", r.y},
                                    {"kappa", rational_json(r.kappa)},
                                    {"jl_lower", rational_json(*r.jl_lower)},
                                    {"jl_upper", rational_json(*r.jl_upper)},
                                    {"w", rational_json(r.wasserstein)}});
            }
            doc["rows"] = std::move(out_rows);
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Text: {
            for (const auto& [r] : rows) {
                out << "edge (" << r.x << ", " << r.y << ")  kappa = " << to_string(r.kappa)
                    << "  W = " << to_string(r.wasserstein)
                    << "  jl = [" << to_string(*r.jl_lower) << ", "
                    << to_string(*r.jl_upper) << "]\n";
            }
            break;
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------ gluing sweep

int run_sweep(IntRange n_range, std::optional<IntRange> m_range, int jobs,
              Format format, Sink& sink) {
    if (n_range.lo < 2 || n_range.hi > 20) {
        throw InvalidSpecError("sweep n range must lie in [2, 20]");
    }
    struct Job {
        int n, m;
    };
    std::vector<Job> todo;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        int m_lo = 1, m_hi = n - 1;
        if (m_range) {
            m_lo = std::max(m_lo, m_range->lo);
            m_hi = std::min(m_hi, m_range->hi);
        }
        for (int m = m_lo; m <= m_hi; ++m) todo.push_back({n, m});
    }

    struct Row {
        int n, m;
        Rational kappa_min;
        Edge argmin;
        std::string argmin_class;
        bool positive;
        bool is_m_marker;  // m == M(n)
    };
    std::vector<Row> rows(todo.size());
    run_parallel(jobs, todo.size(), [&](size_t i) {
        auto [n, m] = todo[i];
        GluingSpec spec{n, m};
        EdgeCurvature min_edge = min_edge_curvature(build_gluing(spec));
        bool is_m = n >= 5 && positivity_window(n).smallest_positive_m == m;
        rows[i] = {n,
                   m,
                   min_edge.kappa,
                   min_edge.edge,
                   to_string(classify_edge(spec, min_edge.edge.first, min_edge.edge.second)),
                   min_edge.kappa > 0,
                   is_m};
    });

    std::ostream& out = sink.out();
    switch (format) {
        case Format::Csv: {
            out << "n,m,kappa_min_num,kappa_min_den,argmin_x,argmin_y,argmin_class,"
                   "positive,is_M\n";
            for (const auto& r : rows) {
                out << r.n << "," << r.m << "," << numerator(r.kappa_min) << ","
                    << denominator(r.kappa_min) << "," << r.argmin.first << ","
                    << r.argmin.second << "," << r.argmin_class << ","
                    << (r.positive ? "T" : "F") << "," << (r.is_m_marker ? "T" : "F")
                    << "\n";
            }
            break;
        }
        case Format::Json: {
            json doc;
            doc["schema"] = 1;
            doc["command"] = "gluing-sweep";
            json out_rows = json::array();
            for (const auto& r : rows) {
                out_rows.push_back({{"n", r.n},
                                    {"m", r.m},
                                    {"kappa_min", rational_json(r.kappa_min)},
                                    {"argmin", {r.argmin.first, r.argmin.second}},
                                    {"argmin_class", r.argmin_class},
                                    {"positive", r.positive},
                                    {"is_M", r.is_m_marker}});
            }
            doc["rows"] = std::move(out_rows);
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Text: {
            for (const auto& r : rows) {
                out << "n=" << r.n << " m=" << r.m
                    << "  min kappa = " << to_string(r.kappa_min) << " at ("
                    << r.argmin.first << ", " << r.argmin.second << ") [" << r.argmin_class
                    << "]" << (r.positive ? "  positive" : "  not positive")
                    << (r.is_m_marker ? "  <- M" : "") << "\n";
            }
            break;
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyState {
    std::ostream& out;
    int failures = 0;
    std::string first_counterexample = {};

    void check(bool ok, const std::string& line) {
        out << (ok ? "ok    " : "FAIL  ") << line << "\n";
        if (!ok) {
            ++failures;
            if (first_counterexample.empty()) first_counterexample = line;
        }
    }
    void info(const std::string& line) { out << "info  " << line << "\n"; }
};

// Checks one n: the positivity window against the exact solver, every
// edge against its class formula, the M / global-bound statements, and
// the spectral sandwiches.
void verify_one_n(int n, bool inject_off_by_one, VerifyState& state) {
    PositivityWindow window = positivity_window(n);

    for (int m = 1; m <= n - 1; ++m) {
        GluingSpec spec{n, m};
        Graph g = build_gluing(spec);

        // Exact curvature of every edge, compared with its class formula.
        Rational kappa_min;
        bool first_edge = true;
        struct ClassStat {
            int edges = 0;
            Rational solver;
            bool ok = true;
        };
        std::map<EdgeClass, ClassStat> stats;
        for (const auto& [x, y] : g.edges()) {
            Rational kappa = ricci_curvature(g, x, y).kappa;
            if (first_edge || kappa < kappa_min) kappa_min = kappa;
            first_edge = false;
            EdgeClass c = classify_edge(spec, x, y);
            KappaValue formula = closed_form_kappa(spec, c);
            auto& stat = stats[c];
            ++stat.edges;
            stat.solver = kappa;
            stat.ok = stat.ok && formula.lower <= kappa && kappa <= formula.upper;
        }
        for (const auto& [c, stat] : stats) {
            KappaValue formula = closed_form_kappa(spec, c);
            std::string shape = formula.exact()
                                    ? "formula=" + to_string(formula.lower)
                                    : "bracket=[" + to_string(formula.lower) + ", " +
                                          to_string(formula.upper) + "]";
            state.check(stat.ok, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                     " class=" + to_string(c) + " edges=" +
                                     std::to_string(stat.edges) + " solver=" +
                                     to_string(stat.solver) + " " + shape);
        }

        // Positivity window. The off-by-one hook turns the strict
        // threshold comparison into a non-strict one, a deliberate
        // negative control that trips at integral thresholds.
        bool predicted = inject_off_by_one ? Rational(m) >= window.threshold
                                           : Rational(m) > window.threshold;
        bool actual = kappa_min > 0;
        state.check(predicted == actual,
                    "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                        " window: kappa_min=" + to_string(kappa_min) + " positive=" +
                        (actual ? "T" : "F") + " predicted=" + (predicted ? "T" : "F") +
                        " threshold=" + to_string(window.threshold));
    }

    // M and the global curvature bound at M.
    int expected_m = n > 6 ? n - 3 : n - 2;
    state.check(window.smallest_positive_m == expected_m,
                "n=" + std::to_string(n) + " M=" +
                    std::to_string(window.smallest_positive_m) + " expected=" +
                    std::to_string(expected_m));
    Rational bound = global_lower_bound_at_M(n);
    Rational kappa_at_m =
        min_edge_curvature(build_gluing({n, window.smallest_positive_m})).kappa;
    state.check(bound <= kappa_at_m,
                "n=" + std::to_string(n) + " global bound " + to_string(bound) +
                    " <= kappa_min(M) = " + to_string(kappa_at_m));

    // Spectral sandwiches at M. The eigenvalue sandwich and the Cheeger
    // chains for the conductance are asserted; the size-normalized
    // Cheeger constant (the verbatim |A|-denominator definition) fails
    // the upper Cheeger inequality on these graphs, so its chains are
    // reported as information rather than gated.
    SandwichReport s = verify_sandwich(n);
    state.check(s.eigen_sandwich_ok,
                "n=" + std::to_string(n) + " eigen sandwich: kappa_min=" +
                    to_string(s.kappa_min) + " lambda1=" + fmt_double(s.lambda1));
    state.check(s.chung_volume_ok,
                "n=" + std::to_string(n) + " cheeger chain (conductance): lambda1/2=" +
                    fmt_double(s.lambda1 / 2) + " h_vol=" + to_string(s.cheeger_volume) +
                    " sqrt(2 lambda1)=" + fmt_double(std::sqrt(2 * s.lambda1)));
    state.check(s.bracket_volume_ok,
                "n=" + std::to_string(n) + " corollary bracket (conductance): " +
                    to_string(s.bracket_lower) + " <= " + to_string(s.cheeger_volume) +
                    " <= " + fmt_double(s.bracket_upper));
    state.info("n=" + std::to_string(n) + " size-normalized h=" +
               to_string(s.cheeger_size) + " cheeger chain " +
               (s.chung_size_ok ? "holds" : "fails") + ", corollary bracket " +
               (s.bracket_size_ok ? "holds" : "fails"));
}

int run_verify(IntRange n_range, bool inject_off_by_one, Sink& sink) {
    if (n_range.lo < 5) {
        throw NTooSmallError("verify requires n >= 5, got " + std::to_string(n_range.lo));
    }
    if (n_range.hi > 10) {
        throw InvalidSpecError("verify caps at n = 10 (exhaustive Cheeger enumeration)");
    }
    VerifyState state{sink.out()};
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        verify_one_n(n, inject_off_by_one, state);
    }
    if (state.failures == 0) {
        state.out << "PASS all checks, n=" << n_range.lo << ".." << n_range.hi << "\n";
        return kExitOk;
    }
    state.out << "FAIL " << state.failures
              << " check(s); first counterexample: " << state.first_counterexample
              << "\n";
    return kExitCounterexample;
}

// --------------------------------------------------------------- spectral

int run_spectral(const GraphSource& source, Format format, Sink& sink) {
    Graph g = source.load();
    SpectralReport r = normalized_laplacian_gap(g);
    double unnormalized = unnormalized_laplacian_gap(g);
    std::ostream& out = sink.out();
    switch (format) {
        case Format::Csv:
            out << "lambda1,kappa_min_num,kappa_min_den,eigen_residual,unnormalized_gap\n"
                << fmt_double(r.lambda1) << "," << numerator(r.kappa_min) << ","
                << denominator(r.kappa_min) << "," << fmt_double(r.eigen_residual) << ","
                << fmt_double(unnormalized) << "\n";
            break;
        case Format::Json: {
            json doc;
            doc["schema"] = 1;
            doc["command"] = "spectral";
            doc["lambda1"] = fmt_double(r.lambda1);
            doc["kappa_min"] = rational_json(r.kappa_min);
            doc["eigen_residual"] = fmt_double(r.eigen_residual);
            doc["unnormalized_gap"] = fmt_double(unnormalized);
            json spectrum = json::array();
            for (double v : r.spectrum) spectrum.push_back(fmt_double(v));
            doc["spectrum"] = std::move(spectrum);
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Text:
            out << "lambda1 = " << fmt_double(r.lambda1)
                << "\nkappa_min = " << to_string(r.kappa_min)
                << "\neigen_residual = " << fmt_double(r.eigen_residual)
                << "\nunnormalized_gap = " << fmt_double(unnormalized) << "\n";
            break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- cheeger

int run_cheeger(const GraphSource& source, bool at_most_half, Format format, Sink& sink) {
    Graph g = source.load();
    CheegerReport size_report = cheeger_constant(
        g, at_most_half ? CheegerSizeRule::AtMostHalf : CheegerSizeRule::StrictHalf);
    CheegerReport volume_report = cheeger_conductance(g);

    auto set_str = [](const std::vector<int>& s) {
        std::string out = "{";
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s[i]);
        }
        return out + "}";
    };

    std::ostream& out = sink.out();
    switch (format) {
        case Format::Csv:
            out << "h_num,h_den,argmin,conductance_num,conductance_den\n"
                << numerator(size_report.value) << "," << denominator(size_report.value)
                << "," << set_str(size_report.argmin_set) << ","
                << numerator(volume_report.value) << ","
                << denominator(volume_report.value) << "\n";
            break;
        case Format::Json: {
            json doc;
            doc["schema"] = 1;
            doc["command"] = "cheeger";
            doc["h"] = rational_json(size_report.value);
            doc["argmin"] = size_report.argmin_set;
            doc["conductance"] = rational_json(volume_report.value);
            doc["conductance_argmin"] = volume_report.argmin_set;
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Text:
            out << "h = " << to_string(size_report.value) << " at A = "
                << set_str(size_report.argmin_set)
                << "\nconductance = " << to_string(volume_report.value) << " at A = "
                << set_str(volume_report.argmin_set) << "\n";
            break;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ollivier-Ricci curvature on finite graphs"};
    app.require_subcommand(1);

    std::string input, gluing, format_name = "text", output = "-", n_expr, m_expr;
    int jobs = 1;
    bool inject = false, at_most_half = false;

    auto add_source = [&](CLI::App* cmd) {
        auto* in_opt = cmd->add_option("--input", input, "edge-list file (u v per line)");
        auto* gl_opt =
            cmd->add_option("--gluing", gluing, "gluing graph parameters, e.g. n=6,m=3");
        in_opt->excludes(gl_opt);
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "csv, json, or text")
            ->check(CLI::IsMember({"csv", "json", "text"}));
        cmd->add_option("--output", output, "output path, - for stdout");
    };

    auto* curvature = app.add_subcommand("curvature", "per-edge curvature report");
    add_source(curvature);
    add_common(curvature);

    auto* sweep = app.add_subcommand("gluing-sweep", "minimum curvature over (n, m)");
    sweep->add_option("--n", n_expr, "n range, e.g. 5..9")->required();
    sweep->add_option("--m", m_expr, "m range (default 1..n-1)");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_common(sweep);

    auto* verify = app.add_subcommand("verify", "verify the curvature theorems");
    verify->add_option("--n", n_expr, "n range in [5, 10] (default 5..9)");
    verify->add_flag("--inject-off-by-one", inject)->group("");  // test hook
    verify->add_option("--output", output, "output path, - for stdout");

    auto* spectral = app.add_subcommand("spectral", "normalized Laplacian gap");
    add_source(spectral);
    add_common(spectral);

    auto* cheeger = app.add_subcommand("cheeger", "exhaustive Cheeger constant");
    add_source(cheeger);
    cheeger->add_flag("--at-most-half", at_most_half,
                      "use the conventional |A| <= |V|/2 constraint");
    add_common(cheeger);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        GraphSource source{input, gluing};
        if (curvature->parsed() || spectral->parsed() || cheeger->parsed()) {
            if (input.empty() == gluing.empty()) {
                throw ParseError("exactly one of --input / --gluing is required");
            }
        }
        Format format = parse_format(format_name);
        Sink sink(output);
        if (curvature->parsed()) return run_curvature(source, format, sink);
        if (sweep->parsed()) {
            std::optional<IntRange> m_range;
            if (!m_expr.empty()) m_range = parse_range(m_expr);
            return run_sweep(parse_range(n_expr), m_range, jobs, format, sink);
        }
        if (verify->parsed()) {
            IntRange range = n_expr.empty() ? IntRange{5, 9} : parse_range(n_expr);
            return run_verify(range, inject, sink);
        }
        if (spectral->parsed()) return run_spectral(source, format, sink);
        if (cheeger->parsed()) return run_cheeger(source, at_most_half, format, sink);
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
