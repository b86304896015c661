#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "skewtab/json_io.hpp"
#include "skewtab/svg.hpp"
#include "skewtab/verify.hpp"

using namespace skewtab;

namespace {

// exit codes: 0 ok, 1 verify failure, 2 parse error, 3 budget, 4 mismatch
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

long now_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

int run_count(const std::string& shape_text, const std::string& what,
              const std::string& method, bool all_methods, bool as_json) {
    SkewShape s = parse_shape(shape_text);
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CountReport> reports;
    if (what == "syt") {
        if (all_methods) {
            for (SytMethod m : applicable_syt_methods(s))
                reports.push_back(count_syt_method(s, m));
        } else {
            auto m = syt_method_from_string(method);
            if (!m) throw DomainError("unknown SYT method '" + method + "'");
            reports.push_back(count_syt_method(s, *m));
        }
    } else if (what == "oot") {
        std::vector<OotMethod> methods;
        if (all_methods) {
            methods = {OotMethod::Enumerate, OotMethod::DetRows, OotMethod::DetCols,
                       OotMethod::LascouxPragacz, OotMethod::NinthVariation};
        } else {
            auto m = oot_method_from_string(method);
            if (!m) throw DomainError("unknown OOT method '" + method + "'");
            methods = {*m};
        }
        for (OotMethod m : methods) reports.push_back(count_oot_method(s, m));
    } else {
        throw DomainError("--what must be 'syt' or 'oot'");
    }
    long elapsed = now_ms(t0);
    for (const CountReport& rep : reports) {
        if (as_json)
            std::cout << count_report_to_json(rep, elapsed) << "\n";
        else {
            std::cout << rep.shape << " " << rep.method << " = " << rep.value.get_str();
            if (rep.term_count) std::cout << "  (terms: " << rep.term_count->get_str() << ")";
            std::cout << "\n";
        }
    }
    for (const CountReport& rep : reports)
        if (rep.value != reports.front().value) {
            std::cerr << "method disagreement: " << rep.method << " = "
                      << rep.value.get_str() << " vs " << reports.front().method << " = "
                      << reports.front().value.get_str() << "\n";
            return kExitMismatch;
        }
    return 0;
}

int run_verify(int max_cells, const std::string& suite, int n_max, int cells_max,
               long degree, int jobs, bool as_json) {
    std::vector<SuiteResult> results;
    if (suite.empty()) {
        results = run_all_suites(max_cells, degree, jobs);
    } else if (suite == "cross-methods") {
        results.push_back(suite_cross_methods(max_cells, jobs));
    } else if (suite == "bijections") {
        results.push_back(suite_bijections(max_cells, jobs));
    } else if (suite == "qratio") {
        results.push_back(suite_qratio(max_cells, degree, jobs));
    } else if (suite == "genocchi") {
        results.push_back(suite_genocchi(n_max));
    } else if (suite == "zigzag") {
        results.push_back(suite_zigzag(cells_max, n_max));
    } else if (suite == "proportionality") {
        results.push_back(suite_zigzag(cells_max, n_max));
    } else if (suite == "sandwich") {
        results.push_back(suite_sandwich(max_cells, 4));
    } else if (suite == "geometric") {
        results.push_back(suite_geometric(max_cells));
    } else {
        throw DomainError("unknown suite '" + suite + "'");
    }
    bool all_pass = true;
    for (const SuiteResult& r : results) {
        all_pass = all_pass && r.pass;
        if (as_json) {
            nlohmann::json j;
            j["suite"] = r.name;
            j["pass"] = r.pass;
            j["checks"] = r.checks;
            if (!r.pass) j["counterexample"] = r.detail;
            j["elapsed_ms"] = static_cast<long>(r.seconds * 1000);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << "  (" << r.checks
                      << " checks, " << r.seconds << "s)";
            if (!r.pass) std::cout << "  counterexample: " << r.detail;
            std::cout << "\n";
        }
    }
    return all_pass ? 0 : kExitVerifyFail;
}

int run_qratio(const std::string& shape_text, const std::string& method,
               bool all_methods, bool as_json) {
    SkewShape s = parse_shape(shape_text);
    std::vector<RppMethod> methods;
    if (all_methods)
        methods = {RppMethod::MinStat, RppMethod::MaxStat, RppMethod::ExcitedPeaks,
                   RppMethod::ReverseExcited, RppMethod::Krattenthaler,
                   RppMethod::Grothendieck};
    else {
        auto m = rpp_method_from_string(method);
        if (!m) throw DomainError("unknown rpp method '" + method + "'");
        methods = {*m};
    }
    QLaurent first;
    for (size_t i = 0; i < methods.size(); ++i) {
        QLaurent r = rpp_ratio(s, methods[i]);
        if (i == 0) first = r;
        if (!(r == first)) {
            std::cerr << "method disagreement at " << to_string(methods[i]) << "\n";
            return kExitMismatch;
        }
        if (as_json)
            std::cout << qlaurent_to_json(r) << "\n";
        else
            std::cout << r.to_string() << "\n";
        if (!all_methods) break;
    }
    return 0;
}

int run_svg(const std::string& target, const std::string& shape_text, int index,
            bool all, const std::string& out_path) {
    SkewShape s = parse_shape(shape_text);
    std::vector<std::string> docs;
    if (target == "tiling") {
        std::vector<LozengeTiling> tilings = enumerate_tilings(s);
        if (all)
            for (const LozengeTiling& t : tilings) docs.push_back(svg_tiling(t));
        else if (index >= 0 && index < static_cast<int>(tilings.size()))
            docs.push_back(svg_tiling(tilings[static_cast<size_t>(index)]));
        else
            throw DomainError("tiling index out of range");
    } else if (target == "puzzle") {
        std::vector<KTPuzzle> puzzles = enumerate_puzzles(
            s.outer(), s.inner(), s.outer(), s.num_rows(), s.outer().part(1));
        if (all)
            for (const KTPuzzle& p : puzzles) docs.push_back(svg_puzzle(p));
        else if (index >= 0 && index < static_cast<int>(puzzles.size()))
            docs.push_back(svg_puzzle(puzzles[static_cast<size_t>(index)]));
        else
            throw DomainError("puzzle index out of range");
    } else {
        throw DomainError("svg target must be 'tiling' or 'puzzle'");
    }
    for (size_t i = 0; i < docs.size(); ++i) {
        std::string path = out_path;
        if (docs.size() > 1) {
            auto dot = path.rfind('.');
            std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
            std::string ext = dot == std::string::npos ? "" : path.substr(dot);
            path = stem + "_" + std::to_string(i) + ext;
        }
        std::ofstream out(path);
        if (!out) throw DomainError("cannot open output file " + path);
        out << docs[i];
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting for skew standard tableaux and the objects behind the formulas"};
    app.require_subcommand(1);

    std::string shape, method = "oof", what = "syt", suite, svg_target, out_path = "out.svg";
    bool all_methods = false, as_json = false, svg_all = false;
    int max_cells = 6, n_max = 6, cells_max = 20, jobs = 1, index = 0;
    long degree = 25;
    if (const char* env = std::getenv("SKEWTAB_MAX_CELLS")) {
        int v = std::atoi(env);
        if (v > 0) max_cells = std::min(v, 8);
    }

    CLI::App* count = app.add_subcommand("count", "count f^{lambda/mu} or OOT(lambda/mu)");
    count->add_option("--shape", shape, "shape, e.g. 2,2,2,1/1,1")->required();
    count->add_option("--what", what, "syt (default) or oot");
    count->add_option("--method", method, "method name (see README)");
    count->add_flag("--all-methods", all_methods, "run every applicable method");
    count->add_flag("--json", as_json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--max-cells", max_cells, "scan bound on |lambda|")
        ->check(CLI::Range(0, 8));
    verify->add_option("--suite", suite,
                       "cross-methods|bijections|qratio|genocchi|zigzag|proportionality|"
                       "sandwich|geometric");
    verify->add_option("--n-max", n_max, "sequence bound for the zigzag suites");
    verify->add_option("--cells-max", cells_max, "cell bound for the zigzag suites");
    verify->add_option("--degree", degree, "series truncation degree");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    verify->add_flag("--json", as_json, "JSON output");

    CLI::App* qratio = app.add_subcommand("qratio", "rpp_{lambda/mu}(q)/rpp_lambda(q)");
    qratio->add_option("--shape", shape)->required();
    qratio->add_option("--method", method, "rpp method (default minstat)")
        ->default_val("minstat");
    qratio->add_flag("--all-methods", all_methods);
    qratio->add_flag("--json", as_json);

    CLI::App* svg = app.add_subcommand("svg", "emit SVG for a tiling or puzzle");
    svg->add_option("target", svg_target, "tiling or puzzle")->required();
    svg->add_option("--shape", shape)->required();
    svg->add_option("--index", index, "object index in enumeration order");
    svg->add_flag("--all", svg_all, "emit every object");
    svg->add_option("-o,--output", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (count->parsed()) return run_count(shape, what, method, all_methods, as_json);
        if (verify->parsed())
            return run_verify(max_cells, suite, n_max, cells_max, degree, jobs, as_json);
        if (qratio->parsed()) return run_qratio(shape, method, all_methods, as_json);
        if (svg->parsed()) return run_svg(svg_target, shape, index, svg_all, out_path);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ResourceError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return 0;
}
