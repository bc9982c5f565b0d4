#include "pfaff/cli.hpp"

#include "pfaff/catalog.hpp"
#include "pfaff/error.hpp"
#include "pfaff/reduction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pfaff {

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Vector parse_components(const std::string& text) {
    Vector out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const Error&) {
            throw UsageError("'" + item + "' is not a rational number");
        }
    }
    if (out.empty()) throw UsageError("empty coordinate list");
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of Pfaffian systems", "pfaff"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    std::string file, system, point, coords, seed, out_path;
    bool json = false, text = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a system file");
    analyze_cmd->add_option("FILE", file, "system file")->required();
    analyze_cmd->add_option("--system", system, "system name (default: first declared)");
    auto* point_opt = analyze_cmd->add_option("--point", point, "named point");
    analyze_cmd->add_option("--coords", coords, "explicit rational point q1,...,qn")->excludes(point_opt);
    analyze_cmd->add_option("--seed", seed, "analyze only this seed chain besides the default stream");
    auto* json_flag = analyze_cmd->add_flag("--json", json, "JSON report");
    analyze_cmd->add_flag("--text", text, "text report (default)")->excludes(json_flag);
    analyze_cmd->add_option("--out", out_path, "write the report to PATH");

    std::string action, entry;
    bool catalog_json = false;
    auto* catalog_cmd = app.add_subcommand("catalog", "built-in examples");
    catalog_cmd->add_option("ACTION", action, "list | show NAME | run-all")
        ->required()
        ->check(CLI::IsMember({"list", "show", "run-all"}));
    catalog_cmd->add_option("NAME", entry, "entry name for show");
    catalog_cmd->add_flag("--json", catalog_json, "JSON output");

    std::string from = "origin", dir = "0", csv;
    double step = 1e-3;
    std::size_t count = 1000;
    auto* trace_cmd = app.add_subcommand("trace", "trace an integral curve numerically");
    trace_cmd->add_option("FILE", file, "system file")->required();
    trace_cmd->add_option("--system", system, "system name (default: first declared)");
    trace_cmd->add_option("--from", from, "named start point")->capture_default_str();
    trace_cmd->add_option("--dir", dir, "annihilator-basis index, or rational components q1,...,qn")
        ->capture_default_str();
    trace_cmd->add_option("--step", step, "step size")->check(CLI::PositiveNumber)->capture_default_str();
    trace_cmd->add_option("--count", count, "number of steps")->capture_default_str();
    trace_cmd->add_option("--csv", csv, "CSV output path (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "pfaff: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            const std::string source = read_file(file);
            const SystemDocument doc = parse_document(source);
            AnalysisOptions options;
            if (!system.empty()) options.system = system;
            if (!point.empty()) options.point = point;
            if (!coords.empty()) options.coordinates = parse_components(coords);
            if (!seed.empty()) options.seed = seed;
            const AnalysisReport report = analyze(doc, options, source);
            emit(json ? to_json(report) : to_text(report), out_path, out);
            for (const auto& p : report.points) {
                if (p.degenerate) err << "pfaff: point " << p.name << " is degenerate: " << p.diagnostic << "\n";
            }
            return 0;
        }
        if (catalog_cmd->parsed()) {
            if (action == "list") {
                for (const auto& e : catalog()) out << e.name << "  " << e.title << "\n";
                return 0;
            }
            if (action == "show") {
                if (entry.empty()) throw UsageError("catalog show needs an entry name");
                const auto& e = catalog_entry(entry);
                out << "# " << e.name << ": " << e.title << "\n" << e.source;
                for (const auto& c : e.checks) {
                    out << "# expect " << c.key << " = " << c.expected << " [" << c.provenance
                        << (c.note.empty() ? "" : "; " + c.note) << "]\n";
                }
                return 0;
            }
            const auto results = run_all();
            out << (catalog_json ? results_json(results) : results_text(results));
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
            return ok ? 0 : 1;
        }
        if (trace_cmd->parsed()) {
            const std::string source = read_file(file);
            const SystemDocument doc = parse_document(source);
            const PfaffianSystem sys = doc.system(system.empty() ? doc.default_system().name : system);
            DirectionSelector direction;
            if (dir.find(',') == std::string::npos && std::all_of(dir.begin(), dir.end(), ::isdigit) && !dir.empty()) {
                direction = static_cast<std::size_t>(std::stoul(dir));
            } else {
                direction = parse_components(dir);
            }
            const TracedCurve curve = trace_integral_curve(sys, doc.point(from), direction, step, count);
            std::ostringstream s;
            write_csv(s, curve, doc.chart);
            emit(s.str(), csv, out);
            err << "max residual " << curve.max_residual << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << "pfaff: " << file << ":" << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "pfaff: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "pfaff: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

} // namespace pfaff
