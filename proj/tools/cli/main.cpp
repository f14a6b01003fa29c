#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "registry.hpp"
#include "suites.hpp"

#include <univalent/legendre.hpp>
#include <univalent/loewner.hpp>
#include <univalent/weinstein.hpp>

using namespace univalent;
using namespace univalent::cli;

namespace
{

enum ExitCode { exit_pass = 0, exit_check_failure = 1, exit_usage = 2, exit_numeric = 3 };

// "--out json" / "--out csv" select the format and print to stdout.
void resolve_out(std::string &out, std::string &format)
{
    if (out == "json" || out == "csv") {
        format = out;
        out.clear();
    }
}

std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (const char ch : s) {
        q += ch;
        if (ch == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

std::string fmt(double v)
{
    if (!std::isfinite(v)) {
        return "nan";
    }
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void apply_config_file(const std::string &path, SuiteConfig &c)
{
    std::ifstream is(path);
    if (!is) {
        throw Error(Errc::IoFailure, "cannot read config '" + path + "'");
    }
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::ParamOutOfRange, std::string("malformed config: ") + e.what());
    }
    try {
        if (j.contains("suite")) c.suite = j["suite"].get<std::string>();
        if (j.contains("function")) c.function = j["function"].get<std::string>();
        if (j.contains("n")) c.n = j["n"].get<int>();
        if (j.contains("order")) c.order = j["order"].get<std::size_t>();
        if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
        if (j.contains("radius")) c.radii = j["radius"].get<std::vector<double>>();
        if (j.contains("ladder")) c.ladder = j["ladder"].get<std::vector<double>>();
        if (j.contains("quadrature")) c.quadrature = j["quadrature"].get<std::size_t>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("t")) c.t = j["t"].get<double>();
        if (j.contains("T")) c.horizon = j["T"].get<double>();
        if (j.contains("format")) c.format = j["format"].get<std::string>();
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::ParamOutOfRange, std::string("bad config value: ") + e.what());
    }
}

int run_verify(SuiteConfig c)
{
    resolve_out(c.out, c.format);
    const auto reports = run_suite(c);
    std::size_t cases = 0;
    std::size_t failures = 0;
    for (const auto &r : reports) {
        cases += r.cases().size();
        failures += r.failures();
    }
    std::string text;
    if (c.format == "csv") {
        std::ostringstream os;
        os << "suite,id,lhs,rhs,pass\n";
        for (const auto &r : reports) {
            for (const auto &row : r.to_json()["cases"]) {
                os << csv_escape(r.name()) << ',' << csv_escape(row["id"].get<std::string>()) << ','
                   << (row["lhs"].is_null() ? "nan" : fmt(row["lhs"].get<double>())) << ','
                   << (row["rhs"].is_null() ? "nan" : fmt(row["rhs"].get<double>())) << ','
                   << (row["pass"].get<bool>() ? "true" : "false") << '\n';
            }
        }
        text = os.str();
    } else {
        nlohmann::json j;
        j["command"] = "verify";
        j["config"] = c.to_json();
        j["suites"] = nlohmann::json::array();
        for (const auto &r : reports) {
            j["suites"].push_back(r.to_json());
        }
        j["summary"] = {{"cases", cases}, {"failures", failures}, {"pass", failures == 0}};
        text = j.dump(2) + "\n";
    }
    write_output(c.out, text);
    std::cerr << "verify " << c.suite << ": " << cases - failures << "/" << cases << " cases pass\n";
    return failures == 0 ? exit_pass : exit_check_failure;
}

struct TableOptions {
    std::string kind;
    int n = 5;
    double t = 0.0;
    std::optional<int> k;
    std::string function = "koebe";
    std::string out;
    std::string format = "csv";
};

int run_table(TableOptions o)
{
    resolve_out(o.out, o.format);
    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> csv;
    if (o.kind == "legendre") {
        header = {"n", "k", "coefficient"};
        for (int n = 0; n <= o.n; ++n) {
            const auto &p = legendre_poly(n).poly;
            for (int k = 0; k <= n; ++k) {
                const std::string q = to_string(p.coefficient(k));
                csv.push_back({std::to_string(n), std::to_string(k), q});
                rows.push_back({{"n", n}, {"k", k}, {"coefficient", q}});
            }
        }
    } else if (o.kind == "lambda") {
        header = {"k", "n", "lambda"};
        const auto table = lambda_table(o.t, o.n);
        const int k_lo = o.k.value_or(0);
        const int k_hi = o.k.value_or(o.n);
        if (k_lo < 0 || k_hi > o.n) {
            throw Error(Errc::ParamOutOfRange, "k must lie in [0, N]");
        }
        for (int k = k_lo; k <= k_hi; ++k) {
            for (int n = 0; n <= o.n; ++n) {
                csv.push_back({std::to_string(k), std::to_string(n), fmt(table(k, n))});
                rows.push_back({{"k", k}, {"n", n}, {"lambda", table(k, n)}});
            }
        }
    } else if (o.kind == "coefficients") {
        header = {"n", "re", "im"};
        const auto f = make_function(o.function, static_cast<std::size_t>(o.n));
        for (std::size_t n = 0; n <= f.order(); ++n) {
            const Complex a = f.coefficient(n);
            csv.push_back({std::to_string(n), fmt(a.real()), fmt(a.imag())});
            rows.push_back({{"n", n}, {"re", a.real()}, {"im", a.imag()}});
        }
    } else {
        throw Error(Errc::ParamOutOfRange, "unknown table kind '" + o.kind + "'");
    }

    std::string text;
    if (o.format == "json") {
        nlohmann::json j;
        j["table"] = o.kind;
        j["rows"] = rows;
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < header.size(); ++i) {
            os << (i ? "," : "") << header[i];
        }
        os << '\n';
        for (const auto &r : csv) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                os << (i ? "," : "") << csv_escape(r[i]);
            }
            os << '\n';
        }
        text = os.str();
    }
    write_output(o.out, text);
    return exit_pass;
}

struct TraceOptions {
    std::string kappa = "const:-1";
    double horizon = 8.0;
    double step = 1e-3;
    std::string grid = "polar:8x8";
    std::size_t sample_every = 100;
    std::string out;
};

int run_trace(const TraceOptions &o)
{
    const auto kappa = DrivingFunction::parse(o.kappa);
    const auto grid = parse_grid(o.grid);
    const auto ev = loewner_solve(kappa, grid, o.horizon, o.step, o.sample_every);
    std::ostringstream os;
    ev.write_csv(os);
    write_output(o.out, os.str());
    return exit_pass;
}

struct LambdaOptions {
    double t = 0.5;
    int k = 0;
    int n = 12;
    std::string oracle = "all";
    std::string out;
    std::string format = "json";
    std::size_t quadrature = 1024;
};

int run_lambda(LambdaOptions o)
{
    resolve_out(o.out, o.format);
    if (o.k < 0 || o.k > o.n) {
        throw Error(Errc::ParamOutOfRange, "k must lie in [0, N]");
    }
    const bool fourier = o.oracle == "all" || o.oracle == "fourier";
    const bool legendre = o.oracle == "all" || o.oracle == "legendre";
    if (!fourier && !legendre && o.oracle != "none") {
        throw Error(Errc::ParamOutOfRange, "oracle is one of all, fourier, legendre, none");
    }
    const auto series = lambda_series(o.t, o.k, o.n);
    nlohmann::json rows = nlohmann::json::array();
    double worst = 0.0;
    std::ostringstream csv;
    csv << "n,series,fourier,legendre\n";
    for (int n = 0; n <= o.n; ++n) {
        nlohmann::json row{{"n", n}, {"series", series[static_cast<std::size_t>(n)]}};
        std::string fcell = "";
        std::string lcell = "";
        if (fourier && n <= max_lambda_oracle_degree) {
            const double v = lambda_fourier_oracle(o.t, o.k, n, o.quadrature);
            worst = std::max(worst, std::abs(v - series[static_cast<std::size_t>(n)]));
            row["fourier"] = v;
            fcell = fmt(v);
        } else {
            row["fourier"] = nullptr;
        }
        if (legendre && n <= max_legendre_route_degree) {
            const auto r = legendre_route_check(o.t, n, o.k);
            worst = std::max(worst, std::abs(r.value - series[static_cast<std::size_t>(n)]));
            row["legendre"] = r.value;
            row["legendre_min_summand"] = r.min_summand;
            lcell = fmt(r.value);
        } else {
            row["legendre"] = nullptr;
        }
        csv << n << ',' << fmt(series[static_cast<std::size_t>(n)]) << ',' << fcell << ',' << lcell << '\n';
        rows.push_back(row);
    }
    std::string text;
    if (o.format == "csv") {
        text = csv.str();
    } else {
        nlohmann::json j{{"t", o.t}, {"k", o.k}, {"N", o.n}, {"oracle", o.oracle}, {"rows", rows},
                         {"max_discrepancy", worst}, {"pass", worst < 1e-8}};
        text = j.dump(2) + "\n";
    }
    write_output(o.out, text);
    return worst < 1e-8 ? exit_pass : exit_check_failure;
}

struct DecomposeOptions {
    std::string function = "koebe";
    int n = 6;
    double horizon = 8.0;
    double dt = 0.02;
    std::vector<double> ladder{0.9, 0.99, 0.999};
    double tolerance = 1e-2;
    std::string out;
};

int run_decompose(DecomposeOptions o)
{
    std::string format = "json";
    resolve_out(o.out, format);
    const auto chain = chain_for(o.function);
    const std::size_t order = static_cast<std::size_t>(o.n) + 2;
    const auto f = o.function.starts_with("numeric:") ? ClassSFunction(chain.series(0.0, order), o.function)
                                                      : make_function(o.function, order);
    DecompositionOptions options;
    options.horizon = o.horizon;
    options.dt = o.dt;
    options.radii = o.ladder;
    options.tolerance = o.tolerance;
    const auto d = milin_decomposition_check(f, chain, o.n, options);
    nlohmann::json ladder = nlohmann::json::array();
    for (std::size_t i = 0; i < d.radii.size(); ++i) {
        ladder.push_back({{"r", d.radii[i]}, {"rhs", d.rhs_by_radius[i]}});
    }
    nlohmann::json j{{"function", o.function},
                     {"chain", chain.label()},
                     {"n", o.n},
                     {"T", o.horizon},
                     {"dt", o.dt},
                     {"lhs", d.lhs},
                     {"rhs_limit", d.rhs_limit},
                     {"rhs_by_radius", ladder},
                     {"tail_estimate", d.tail_estimate},
                     {"min_g", d.min_g},
                     {"report", d.report.to_json()}};
    write_output(o.out, j.dump(2) + "\n");
    return d.report.all_pass() ? exit_pass : exit_check_failure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Univalent-function coefficient checks, Loewner chains and Weinstein's Milin decomposition"};
    app.require_subcommand(1);

    SuiteConfig vc;
    std::string config_file;
    std::optional<int> vn;
    auto *verify = app.add_subcommand("verify", "Run verification suites and write a report");
    verify->add_option("--suite", vc.suite, "Suite name or 'all'")
        ->check(CLI::IsMember([] {
            auto names = suite_names();
            names.push_back("all");
            return names;
        }()));
    verify->add_option("--function", vc.function, "koebe | identity | koebe-rot:<theta> | coeffs:<json>");
    verify->add_option("--n", vn, "Index / degree parameter of the suite");
    verify->add_option("--order", vc.order, "Truncation order N");
    verify->add_option("--tol", vc.tolerance, "Bound tolerance");
    verify->add_option("--radius", vc.radii, "Radii for pointwise bounds");
    verify->add_option("--ladder", vc.ladder, "Radius ladder for A_k diagnostics");
    verify->add_option("--quad", vc.quadrature, "Quadrature points");
    verify->add_option("--seed", vc.seed, "Seed for randomized trials");
    verify->add_option("--t", vc.t, "Time for Lambda checks");
    verify->add_option("--T", vc.horizon, "Time horizon");
    verify->add_option("--out", vc.out, "Report path ('-' for stdout)");
    verify->add_option("--format", vc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--config", config_file, "JSON config file; flags override it");

    TableOptions to;
    std::optional<int> tk;
    auto *table = app.add_subcommand("table", "Emit a deterministic table");
    table->add_option("--kind", to.kind, "legendre | lambda | coefficients")
        ->required()
        ->check(CLI::IsMember({"legendre", "lambda", "coefficients"}));
    table->add_option("--n,--N", to.n, "Largest degree / index");
    table->add_option("--t", to.t, "Time (lambda)");
    table->add_option("--k", tk, "Single k (lambda)");
    table->add_option("--function", to.function, "Function (coefficients)");
    table->add_option("--out", to.out, "Output path");
    table->add_option("--format", to.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

    TraceOptions tr;
    auto *loewner = app.add_subcommand("loewner", "Radial Loewner equation tools");
    loewner->require_subcommand(1);
    auto *trace = loewner->add_subcommand("trace", "Integrate the radial equation on a grid and write CSV");
    trace->add_option("--kappa", tr.kappa, "const:<re>[,<im>] | angle:<theta> | steps:<t>:<theta>;...");
    trace->add_option("--T", tr.horizon, "Horizon (<= 20)");
    trace->add_option("--step", tr.step, "Step (<= 1e-2)");
    trace->add_option("--grid", tr.grid, "polar:<R>x<A> | list:<re>,<im>;...");
    trace->add_option("--sample-every", tr.sample_every, "Record every k-th step");
    trace->add_option("--out", tr.out, "CSV path");

    LambdaOptions lo;
    DecomposeOptions dco;
    auto *weinstein = app.add_subcommand("weinstein", "Weinstein coefficients and decomposition");
    weinstein->require_subcommand(1);
    auto *lambda = weinstein->add_subcommand("lambda", "Lambda_k^n(t) by the series route and its oracles");
    lambda->add_option("--t", lo.t, "Time");
    lambda->add_option("--k", lo.k, "Harmonic index");
    lambda->add_option("--N,--n", lo.n, "Largest n");
    lambda->add_option("--oracle", lo.oracle, "all | fourier | legendre | none");
    lambda->add_option("--quad", lo.quadrature, "Quadrature points for the Fourier oracle");
    lambda->add_option("--out", lo.out, "Output path, or json / csv for stdout");
    lambda->add_option("--format", lo.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto *decompose = weinstein->add_subcommand("decompose", "Compare the Milin sum with the integral of g_n");
    decompose->add_option("--function", dco.function, "koebe | identity | koebe-rot:<theta> | numeric:<driving>");
    decompose->add_option("--n", dco.n, "Index n (<= 8)");
    decompose->add_option("--T", dco.horizon, "Horizon (<= 10)");
    decompose->add_option("--dt", dco.dt, "Time step");
    decompose->add_option("--ladder", dco.ladder, "Radius ladder");
    decompose->add_option("--tol", dco.tolerance, "Relative tolerance");
    decompose->add_option("--out", dco.out, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*verify) {
            if (!config_file.empty()) {
                SuiteConfig from_file;
                apply_config_file(config_file, from_file);
                // Flags given on the command line take precedence.
                const SuiteConfig flags = vc;
                vc = from_file;
                auto given = [&](const char *name) { return verify->count(name) > 0; };
                if (given("--suite")) vc.suite = flags.suite;
                if (given("--function")) vc.function = flags.function;
                if (given("--order")) vc.order = flags.order;
                if (given("--tol")) vc.tolerance = flags.tolerance;
                if (given("--radius")) vc.radii = flags.radii;
                if (given("--ladder")) vc.ladder = flags.ladder;
                if (given("--quad")) vc.quadrature = flags.quadrature;
                if (given("--seed")) vc.seed = flags.seed;
                if (given("--t")) vc.t = flags.t;
                if (given("--T")) vc.horizon = flags.horizon;
                if (given("--out")) vc.out = flags.out;
                if (given("--format")) vc.format = flags.format;
            }
            if (vn) {
                vc.n = vn;
            }
            return run_verify(vc);
        }
        if (*table) {
            to.k = tk;
            return run_table(to);
        }
        if (*trace) {
            return run_trace(tr);
        }
        if (*lambda) {
            return run_lambda(lo);
        }
        if (*decompose) {
            return run_decompose(dco);
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
            case Errc::UnknownSuite:
            case Errc::UnknownFunction:
                return exit_usage;
            default:
                return exit_numeric;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numeric;
    }
    return exit_usage;
}
