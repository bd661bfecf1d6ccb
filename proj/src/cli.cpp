#include <qwave/cli.hpp>

#include <qwave/parallel.hpp>
#include <qwave/plot.hpp>
#include <qwave/scenarios.hpp>
#include <qwave/suites.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qwave {

namespace {

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class output_format { csv, json };
enum class plot_kind { none, script, svg };

struct ratio_flags {
    species kind = species::electron;
    momentum_model model = momentum_model::relativistic;
    double energy_mev = 1.0;
    double q_minus_1 = 1e-9;
    double xmin = 0.0;
    double xmax = 1.0;
    std::size_t points = 2001;
    double t = 0.0;
    bool gaussian = false;
    double m = 1.0;
    double beta = 1.0;
    std::string out;
    output_format format = output_format::csv;
    plot_kind plot = plot_kind::none;
};

struct verify_flags {
    std::string suite = "all";
    std::vector<std::string> tolerances;
    std::optional<double> q_minus_1;
    std::string out;
    bool json = false;
};

struct plot_flags {
    std::string csv;
    std::string out;
    plot_kind kind = plot_kind::script;
    plot_meta meta;
};

std::string g17(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw io_error("cannot write " + path);
    file << text;
    file.flush();
    if (!file)
        throw io_error("write to " + path + " failed");
}

std::string render_rows(const std::vector<ratio_row>& rows, const char* y_name, output_format format)
{
    if (format == output_format::json) {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const ratio_row& r : rows)
            doc.push_back({{"x", r.x}, {y_name, r.ratio}});
        return doc.dump(2) + "\n";
    }
    std::string text = std::string("x,") + y_name + "\n";
    for (const ratio_row& r : rows)
        text += g17(r.x) + "," + g17(r.ratio) + "\n";
    return text;
}

void write_plot(plot_kind kind, const std::filesystem::path& csv, const plot_meta& meta, std::filesystem::path target)
{
    if (kind == plot_kind::script) {
        if (target.empty())
            target = std::filesystem::path(csv).replace_extension(".py");
        emit_plot_script(csv, meta, target);
    } else if (kind == plot_kind::svg) {
        if (target.empty())
            target = std::filesystem::path(csv).replace_extension(".svg");
        emit_plot_svg(csv, meta, target);
    }
}

int cmd_ratio(const ratio_flags& f, bool xmin_given, bool xmax_given, std::ostream& out)
{
    if (f.plot != plot_kind::none) {
        if (f.out.empty())
            throw usage_error("--plot needs --out so the CSV can be read back");
        if (f.format != output_format::csv)
            throw usage_error("--plot needs --format csv");
    }

    const unsigned workers = worker_count_from_env();
    std::vector<ratio_row> rows;
    plot_meta meta;
    const char* y_name = "R";
    if (f.gaussian) {
        const gaussian_params params{f.m, f.beta, q_parameter::from_epsilon(f.q_minus_1), 1.0};
        sample_range range = default_gaussian_range();
        range.npoints = f.points;
        if (xmin_given)
            range.min = f.xmin;
        if (xmax_given)
            range.max = f.xmax;
        rows = run_gaussian_sweep(params, range, f.t, workers);
        y_name = "ratio";
        meta.title = "q-Gaussian ratio vs. x, q−1=" + compact_number(f.q_minus_1) + ", m=" + compact_number(f.m)
                     + ", β=" + compact_number(f.beta);
        meta.x_label = "x";
        meta.y_label = "ratio";
    } else {
        particle_scenario scn;
        scn.kind = f.kind;
        scn.model = f.model;
        scn.kinetic_energy = mev_to_joule(f.energy_mev);
        scn.q_minus_1 = f.q_minus_1;
        scn.x = {f.xmin, f.xmax, f.points};
        scn.t = f.t;
        rows = run_ratio_sweep(scn, workers);
        meta.title = "Ratio R vs. x, " + compact_number(f.energy_mev) + " MeV "
                     + (f.kind == species::proton ? "protons" : "electrons") + ", q−1="
                     + compact_number(f.q_minus_1);
    }

    emit(render_rows(rows, y_name, f.format), f.out, out);
    if (f.plot != plot_kind::none)
        write_plot(f.plot, f.out, meta, {});
    return exit_ok;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items)
{
    std::map<std::string, double> tol;
    for (const std::string& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw usage_error("--tol expects key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        if (!default_tolerances().contains(key))
            throw usage_error("unknown tolerance key '" + key + "'");
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item.substr(eq + 1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() - eq - 1)
            throw usage_error("--tol value for '" + key + "' is not a number");
        tol[key] = value;
    }
    return tol;
}

std::string render_table(const std::vector<check_row>& rows)
{
    std::ostringstream s;
    char buf[512];
    std::snprintf(buf, sizeof buf, "%-12s %-62s %12s %14s  %s\n", "suite", "claim", "measured", "tolerance", "result");
    s << buf;
    std::size_t passed = 0;
    for (const check_row& r : rows) {
        passed += r.pass() ? 1 : 0;
        std::snprintf(buf, sizeof buf, "%-12s %-62s %12.4e %s %11.4e  %s\n", r.suite.c_str(), r.claim.c_str(),
                      r.measured, r.cmp == comparison::at_most ? "<=" : ">=", r.tolerance, r.pass() ? "PASS" : "FAIL");
        s << buf;
    }
    s << passed << "/" << rows.size() << " checks passed\n";
    return s.str();
}

std::string render_json(const std::vector<check_row>& rows)
{
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const check_row& r : rows) {
        doc.push_back({{"suite", r.suite},
                       {"claim", r.claim},
                       {"key", r.key},
                       {"measured", r.measured},
                       {"tolerance", r.tolerance},
                       {"comparison", r.cmp == comparison::at_most ? "<=" : ">="},
                       {"pass", r.pass()}});
    }
    return doc.dump(2) + "\n";
}

int cmd_verify(const verify_flags& f, std::ostream& out)
{
    const auto id = parse_suite(f.suite);
    if (!id)
        throw usage_error("unknown suite '" + f.suite + "'");
    suite_options options;
    options.q_minus_1 = f.q_minus_1;
    options.tolerances = parse_tolerances(f.tolerances);
    options.workers = worker_count_from_env();

    const std::vector<check_row> rows = run_suite(*id, options);
    emit(f.json ? render_json(rows) : render_table(rows), f.out, out);
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const check_row& r) { return r.pass(); });
    return ok ? exit_ok : exit_check_failed;
}

int cmd_plot(const plot_flags& f)
{
    write_plot(f.kind, f.csv, f.meta, f.out);
    return exit_ok;
}

int numeric_exit(errc code)
{
    switch (code) {
    case errc::invalid_parameter:
    case errc::invalid_q:
    case errc::non_finite_input:
        return exit_usage;
    default:
        return exit_numeric;
    }
}

/// key=value lines fill options not given on the command line.
void apply_config(const std::string& path, CLI::App* sub)
{
    if (!std::filesystem::is_regular_file(path))
        throw io_error("cannot read config file " + path);
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_file(path);
    } catch (const CLI::Error& e) {
        throw io_error("config file " + path + ": " + e.what());
    }
    for (const CLI::ConfigItem& item : items) {
        if (!item.parents.empty() || item.name == "config")
            throw usage_error("config file " + path + ": unsupported key '" + item.fullname() + "'");
        CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
        if (opt == nullptr)
            throw usage_error("config file " + path + ": unknown key '" + item.name + "'");
        if (opt->count() > 0)
            continue;
        try {
            for (const std::string& value : item.inputs)
                opt->add_result(value);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw usage_error("config file " + path + ": " + item.name + ": " + e.what());
        }
    }
}

const std::map<std::string, plot_kind> plot_names{
    {"none", plot_kind::none}, {"script", plot_kind::script}, {"svg", plot_kind::svg}};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"q-deformed plane waves: ratio sweeps and verification suites", "qwave"};
    app.require_subcommand(1);

    std::string config_path;
    ratio_flags rf;
    auto* ratio = app.add_subcommand("ratio", "Sweep the approximate/exact ratio over x and write CSV");
    ratio->add_option("--config", config_path, "Read key=value defaults from a file; explicit flags win");
    ratio->add_option("--species", rf.kind, "Particle species")
        ->transform(CLI::CheckedTransformer(std::map<std::string, species>{{"electron", species::electron},
                                                                            {"proton", species::proton}},
                                            CLI::ignore_case));
    ratio->add_option("--model", rf.model, "Momentum from kinetic energy")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, momentum_model>{{"relativistic", momentum_model::relativistic},
                                                  {"nonrelativistic", momentum_model::nonrelativistic}},
            CLI::ignore_case));
    ratio->add_option("--energy-mev", rf.energy_mev, "Kinetic energy in MeV")->capture_default_str();
    ratio->add_option("--q-minus-1", rf.q_minus_1, "q - 1")->capture_default_str();
    auto* xmin = ratio->add_option("--xmin", rf.xmin, "Start of the x range (m; natural units with --gaussian)");
    auto* xmax = ratio->add_option("--xmax", rf.xmax, "End of the x range");
    ratio->add_option("--points", rf.points, "Grid points")->capture_default_str()->check(CLI::Range(2, 100000000));
    ratio->add_option("--t", rf.t, "Time")->capture_default_str();
    ratio->add_flag("--gaussian", rf.gaussian, "Sweep the q-Gaussian ratio instead (natural units)");
    ratio->add_option("--m", rf.m, "q-Gaussian mass")->capture_default_str();
    ratio->add_option("--beta", rf.beta, "q-Gaussian width parameter")->capture_default_str();
    ratio->add_option("--out", rf.out, "Output file (default: stdout)");
    ratio->add_option("--format", rf.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, output_format>{{"csv", output_format::csv}, {"json", output_format::json}},
            CLI::ignore_case));
    ratio->add_option("--plot", rf.plot, "Also write a plot next to --out")
        ->transform(CLI::CheckedTransformer(plot_names, CLI::ignore_case));

    verify_flags vf;
    auto* verify = app.add_subcommand("verify", "Run verification suites and print a PASS/FAIL table");
    verify->add_option("--config", config_path, "Read key=value defaults from a file; explicit flags win");
    verify->add_option("--suite", vf.suite, "planewave|separation|gaussian|kleingordon|all")
        ->capture_default_str()
        ->check(CLI::IsMember({"planewave", "separation", "gaussian", "kleingordon", "all"}));
    verify->add_option("--tol", vf.tolerances, "Override a tolerance, key=value (repeatable)");
    verify->add_option("--q-minus-1", vf.q_minus_1, "Run at this single q - 1 (0 is the trivial q = 1 pass)");
    verify->add_option("--out", vf.out, "Output file (default: stdout)");
    verify->add_flag("--json", vf.json, "Emit JSON records instead of a table");

    plot_flags pf;
    auto* plot = app.add_subcommand("plot", "Turn a ratio CSV into a plotting script or SVG");
    plot->add_option("--csv", pf.csv, "Input CSV")->required();
    plot->add_option("--out", pf.out, "Output path (default: CSV path with .py or .svg)");
    plot->add_option("--kind", pf.kind, "script|svg")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, plot_kind>{{"script", plot_kind::script}, {"svg", plot_kind::svg}},
            CLI::ignore_case));
    plot->add_option("--title", pf.meta.title, "Plot title")->capture_default_str();
    plot->add_option("--xlabel", pf.meta.x_label, "x-axis label")->capture_default_str();
    plot->add_option("--ylabel", pf.meta.y_label, "y-axis label")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (!config_path.empty())
            apply_config(config_path, ratio->parsed() ? ratio : verify);
        if (ratio->parsed())
            return cmd_ratio(rf, xmin->count() > 0, xmax->count() > 0, out);
        if (verify->parsed())
            return cmd_verify(vf, out);
        return cmd_plot(pf);
    } catch (const usage_error& e) {
        err << "qwave: " << e.what() << "\n";
        return exit_usage;
    } catch (const io_error& e) {
        err << "qwave: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        err << "qwave: " << e.what() << "\n";
        return numeric_exit(e.code());
    } catch (const std::exception& e) {
        err << "qwave: " << e.what() << "\n";
        return exit_numeric;
    }
}

} // namespace qwave
