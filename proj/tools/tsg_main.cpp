#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsg/errors.hpp"
#include "tsg/report.hpp"

namespace {

nlohmann::json load_params(const std::string& arg) {
    if (arg.empty()) return nlohmann::json::object();
    // Inline JSON starts with an object/array; anything else is a file path.
    if (arg.front() == '{' || arg.front() == '[') return nlohmann::json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open params file: " + arg);
    return nlohmann::json::parse(in);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"torus sequence group toolkit"};

    tsg::RunConfig cfg;
    std::string params_arg;
    std::string out_path;
    app.add_option("--command", cfg.command, "metric | kakutani | polar | hull | monothetic | adic")
        ->required();
    app.add_option("--params", params_arg, "inline JSON object or path to a JSON file");
    app.add_option("--format", cfg.format, "json (default) or csv");
    app.add_option("--seed", cfg.seed, "seed for sampling-based verification");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_flag("--timing", cfg.timing, "include wall-clock timing in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        cfg.params = load_params(params_arg);

        auto t0 = std::chrono::steady_clock::now();
        tsg::Report rep = tsg::run_command(cfg);
        auto t1 = std::chrono::steady_clock::now();
        if (cfg.timing)
            rep.doc["timing_ms"] =
                std::chrono::duration<double, std::milli>(t1 - t0).count();

        std::string text = rep.rendered(cfg.format);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
            out << text;
        }
        if (!rep.verified) {
            std::cerr << "verification failed; see the verification block\n";
            return 2;
        }
        return 0;
    } catch (const tsg::budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "internal postcondition failed: " << e.what() << "\n";
        return 2;
    }
}
