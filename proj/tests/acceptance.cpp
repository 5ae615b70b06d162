// Acceptance suite: one line per criterion, nonzero exit on any failure.
// All checks are exact; there are no tolerances anywhere.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "genschur/cli.hpp"
#include "genschur/verify.hpp"

using namespace genschur;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int id;
    std::string description;
    bool pass;
    std::string detail;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Criterion from_report(int id, const std::string& description, const CheckReport& r) {
    return {id, description + " [" + std::to_string(r.cases) + " cases]", r.pass, r.detail};
}

Criterion golden_criterion() {
    Criterion c{9, "CLI determinism: golden corpus byte equality", true, ""};
    fs::path dir(GENSCHUR_GOLDEN_DIR);
    int count = 0;
    std::set<std::string> covered;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        std::string stem = entry.path().stem().string();
        if (stem.rfind("req_", 0) != 0) continue;
        json req = json::parse(slurp(entry.path()));
        std::string sub = req.at("subcommand").get<std::string>();
        json out;
        int status = run_request(sub, req.at("payload"), out);
        fs::path expected = entry.path();
        expected.replace_extension(".expected");
        std::string want = slurp(expected);
        if (status != req.at("status").get<int>() || dump_stable(out) != want) {
            c.pass = false;
            if (c.detail.empty()) c.detail = "mismatch at " + entry.path().filename().string();
        }
        covered.insert(sub);
        ++count;
    }
    if (count < 20) {
        c.pass = false;
        c.detail = "corpus has only " + std::to_string(count) + " requests";
    }
    if (covered.size() != subcommands().size()) {
        c.pass = false;
        c.detail = "corpus does not span all subcommands";
    }
    c.description += " [" + std::to_string(count) + " requests]";

    // End-to-end spot check through the installed binary.
#ifdef GENSCHUR_CLI_EXE
    int spot = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json" ||
            entry.path().stem().string().rfind("req_", 0) != 0)
            continue;
        if (++spot > 3) break;
        json req = json::parse(slurp(entry.path()));
        fs::path tmp_in = fs::temp_directory_path() / "genschur_accept_in.json";
        fs::path tmp_out = fs::temp_directory_path() / "genschur_accept_out.json";
        {
            std::ofstream o(tmp_in);
            o << req.at("payload").dump();
        }
        std::string cmd = std::string(GENSCHUR_CLI_EXE) + " " +
                          req.at("subcommand").get<std::string>() + " --input " +
                          tmp_in.string() + " --output " + tmp_out.string();
        int rc = std::system(cmd.c_str());
        int status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        fs::path expected = entry.path();
        expected.replace_extension(".expected");
        if (status != req.at("status").get<int>() || slurp(tmp_out) != slurp(expected)) {
            c.pass = false;
            if (c.detail.empty())
                c.detail = "binary run mismatch at " + entry.path().filename().string();
        }
    }
#endif
    return c;
}

} // namespace

int main() {
    SweepConfig cfg; // max_weight 6, n in {1,2,3}, 5 seeded points, seed 0
    std::vector<Criterion> results;

    results.push_back(from_report(
        1, "four-route equality (bialternant = Jacobi-Trudi = dual = Giambelli)",
        sweep_four_route(cfg)));
    results.push_back(from_report(2, "Grassmannian equality H H(0)^-1 = Phi Phi(0)^-1, depth 8",
                                  sweep_grassmannian(cfg, 8)));
    results.push_back(
        from_report(3, "E/H duality: E H = I, H E = I, classical orthogonality",
                    sweep_duality(cfg)));
    results.push_back(from_report(
        4, "Cauchy-Binet expansion sum_mu phi_(lambda mu) S_mu = S^phi_lambda",
        sweep_cauchy_binet(cfg)));
    results.push_back(from_report(
        5, "character = Littlewood expansion (three groups, n = 2, |lambda| <= 4)",
        sweep_characters()));
    results.push_back(from_report(
        6, "Plucker/Giambelli relation of coefficient families, rank <= 2",
        sweep_pluecker(cfg)));
    results.push_back(from_report(
        7, "matrix-model identities: Andreief at t = 0, bimoment Cauchy-Binet",
        sweep_moments()));
    results.push_back(from_report(
        8, "walks: semigroup, t^d/d! closed form, Chapman-Kolmogorov", sweep_walks()));
    results.push_back(golden_criterion());

    bool all = true;
    for (const Criterion& c : results) {
        std::printf("CRITERION %d %s: %s\n", c.id, c.pass ? "PASS" : "FAIL",
                    c.description.c_str());
        if (!c.pass) {
            std::printf("  first failure: %s\n", c.detail.c_str());
            all = false;
        }
    }
    std::printf(all ? "ACCEPTANCE: all criteria pass\n" : "ACCEPTANCE: FAILURES PRESENT\n");
    return all ? 0 : 1;
}
