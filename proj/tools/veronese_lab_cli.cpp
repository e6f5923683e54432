// Command-line front end; all core work goes through the C API.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "veronese_lab.h"

namespace {

std::string take_string(char* s) {
    std::string out = s ? s : "";
    vl_string_free(s);
    return out;
}

int fail_with(vl_status st, const std::string& context) {
    std::cerr << "error: " << context << ": " << vl_last_error() << "\n";
    return int(st);
}

std::string render_text(const nlohmann::ordered_json& rep) {
    std::ostringstream out;
    out << rep["scenario"].get<std::string>() << "  seed " << rep["seed"]
        << "  field " << rep["field"].get<std::string>() << "\n";
    for (const auto& c : rep["checks"])
        out << "  [" << (c["pass"].get<bool>() ? "ok" : "FAIL") << "] "
            << c["name"].get<std::string>() << ": expected " << c["expected"].dump()
            << ", actual " << c["actual"].dump() << "\n";
    out << "  resamples: " << rep["resamples"] << "\n";
    if (!rep["timings_ms"].empty()) {
        out << "  timings:";
        for (const auto& [name, ms] : rep["timings_ms"].items())
            out << " " << name << "=" << ms << "ms";
        out << "\n";
    }
    out << "  " << (rep["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

// Acceptance replicate counts when --seed is not given.
int default_replicates(const std::string& id) {
    if (id == "S7" || id == "S8") return 3;
    if (id == "S10" || id == "S11") return 1;
    return 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection experiments on Veronese surfaces"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "config file; [run] section holds run flags as key=value, flags win");

    // gb
    std::string gb_file, gb_order = "grevlex";
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal file");
    gb->add_option("file", gb_file, "input file (ring header + polynomials)")->required();
    gb->add_option("--order", gb_order, "grevlex|lex|block:K");

    // chow
    std::string chow_ambient, chow_expr;
    bool chow_list = false;
    auto* chow = app.add_subcommand("chow", "evaluate a top-degree intersection product");
    chow->add_option("ambient", chow_ambient, "builtin ambient name");
    chow->add_option("expr", chow_expr, "expression, e.g. \"(3a+b)*(a+3b)\"");
    chow->add_flag("--list", chow_list, "list builtin ambients and tables");

    // run
    std::string run_what, run_out = "text", run_report;
    unsigned long long run_field = 32003, run_seed = 0;
    int run_ext_cap = 24, run_trials = 100, run_retry = 16, run_degree_cap = 12;
    bool seed_given = false;
    auto* run = app.add_subcommand("run", "run scenarios and report checks");
    run->fallthrough(); // lets --config appear after the subcommand
    run->add_option("scenario", run_what, "S1..S11 or `all`")->required();
    run->add_option("--field", run_field, "prime field characteristic");
    run->add_option("--seed", run_seed, "run a single seed instead of the defaults")
        ->each([&](const std::string&) { seed_given = true; });
    run->add_option("--ext-cap", run_ext_cap, "max splitting-field degree");
    run->add_option("--trials", run_trials, "trial count for S10");
    run->add_option("--retry-budget", run_retry, "resampling budget");
    run->add_option("--degree-cap", run_degree_cap, "Hilbert stabilization cap");
    run->add_option("--out", run_out, "text|json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--report", run_report, "write the JSON report array to a file");

    CLI11_PARSE(app, argc, argv);

    if (gb->parsed()) {
        std::ifstream in(gb_file);
        if (!in) {
            std::cerr << "error: cannot open " << gb_file << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        vl_ideal* I = nullptr;
        if (auto st = vl_ideal_parse(buf.str().c_str(), &I); st != VL_OK)
            return fail_with(st, "parsing " + gb_file);
        char* text = nullptr;
        auto st = vl_ideal_groebner(I, gb_order.c_str(), &text);
        vl_ideal_free(I);
        if (st != VL_OK) return fail_with(st, "groebner");
        std::cout << take_string(text);
        return 0;
    }

    if (chow->parsed()) {
        if (chow_list) {
            char* text = nullptr;
            if (auto st = vl_chow_list(&text); st != VL_OK) return fail_with(st, "chow --list");
            std::cout << take_string(text);
            return 0;
        }
        if (chow_ambient.empty() || chow_expr.empty()) {
            std::cerr << "error: need <ambient> <expr> (or --list)\n";
            return 1;
        }
        long long value = 0;
        if (auto st = vl_chow_eval(chow_ambient.c_str(), chow_expr.c_str(), &value); st != VL_OK)
            return fail_with(st, "chow");
        std::cout << value << "\n";
        return 0;
    }

    // run
    std::vector<std::string> ids;
    if (run_what == "all") {
        char* text = nullptr;
        if (auto st = vl_scenario_ids(&text); st != VL_OK) return fail_with(st, "scenario ids");
        std::istringstream in(take_string(text));
        for (std::string line; std::getline(in, line);)
            if (!line.empty()) ids.push_back(line);
    } else {
        ids.push_back(run_what);
    }

    nlohmann::ordered_json all_reports = nlohmann::ordered_json::array();
    bool all_pass = true;
    for (const auto& id : ids) {
        int reps = seed_given ? 1 : default_replicates(id);
        for (int r = 0; r < reps; ++r) {
            unsigned long long seed = seed_given ? run_seed : (unsigned long long)r;
            char* json = nullptr;
            int pass = 0;
            auto st = vl_run_scenario(id.c_str(), run_field, seed, run_retry, run_degree_cap,
                                      run_ext_cap, run_trials, /*include_timings=*/1, &json, &pass);
            if (st != VL_OK) {
                std::cerr << "error: " << id << " seed " << seed << ": " << vl_last_error() << "\n";
                all_pass = false;
                continue;
            }
            auto rep = nlohmann::ordered_json::parse(take_string(json));
            all_reports.push_back(rep);
            all_pass = all_pass && pass;
            if (run_out == "json")
                std::cout << rep.dump(2) << "\n";
            else
                std::cout << render_text(rep) << "\n";
        }
    }
    if (!run_report.empty()) {
        std::ofstream out(run_report);
        if (!out) {
            std::cerr << "error: cannot write " << run_report << "\n";
            return 1;
        }
        out << all_reports.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}
