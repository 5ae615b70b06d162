#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "genschur/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"genschur: exact generalized Schur polynomials, determinantal "
                 "identities, characters, tau series, moments and walk weights"};
    app.require_subcommand(1);

    std::string input_file, output_file;
    long seed = -1, cutoff = -1, truncation = -1;
    app.add_option("--input", input_file, "read the JSON payload from FILE instead of stdin");
    app.add_option("--output", output_file, "write the JSON result to FILE instead of stdout");
    app.add_option("--seed", seed, "seed for the rational test-point generator");
    app.add_option("--cutoff", cutoff, "series cutoff override");
    app.add_option("--truncation", truncation, "basis truncation override");

    for (const std::string& name : genschur::subcommands())
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);
    std::string sub = app.get_subcommands().front()->get_name();

    std::string text;
    if (!input_file.empty()) {
        std::ifstream in(input_file);
        if (!in) {
            std::cerr << "cannot open input file: " << input_file << "\n";
            return genschur::kExitSchemaError;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    if (text.empty()) text = "{}";

    genschur::json payload;
    try {
        payload = genschur::json::parse(text);
    } catch (const std::exception& e) {
        genschur::json err{{"error", {{"code", "schema"}, {"pointer", ""}, {"message", e.what()}}}};
        std::cout << genschur::dump_stable(err);
        return genschur::kExitSchemaError;
    }

    genschur::CliOverrides ov;
    ov.seed = seed;
    ov.cutoff = cutoff;
    ov.truncation = truncation;

    genschur::json out;
    int status = genschur::run_request(sub, payload, out, ov);
    std::string rendered = genschur::dump_stable(out);
    if (!output_file.empty()) {
        std::ofstream of(output_file);
        of << rendered;
    } else {
        std::cout << rendered;
    }
    return status;
}
