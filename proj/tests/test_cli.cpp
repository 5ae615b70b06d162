#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "genschur/cli.hpp"

using namespace genschur;
namespace fs = std::filesystem;

namespace {

json run_ok(const std::string& sub, const json& payload) {
    json out;
    int status = run_request(sub, payload, out);
    REQUIRE(status == kExitOk);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("schur request round trip") {
    json payload = json::parse(R"({"basis":{"kind":"monomial","N":8},"lambda":[1],"x":["1/2","1/3"]})");
    json out = run_ok("schur", payload);
    CHECK(out["routes"]["bialternant"] == "5/6");
    CHECK(out["routes"]["giambelli"] == "5/6");
    CHECK(out["agree"] == true);
    CHECK(out["n"] == 2);
}

TEST_CASE("verify single case and sweep statuses") {
    json out;
    int status = run_request(
        "verify", json::parse(R"({"basis":{"kind":"sp","N":8},"lambda":[0],"x":["1/2","1/3"]})"),
        out);
    CHECK(status == kExitOk);
    CHECK(out["agree"] == true);
    CHECK(out["value"] == "1");

    status = run_request("verify", json::parse(R"({"kind":"window_recursion","n":2,"kmax":2})"),
                         out);
    CHECK(status == kExitOk);
    CHECK(out["pass"] == true);
}

TEST_CASE("walk at t = 0 gives identity weights") {
    json payload = json::parse(R"({"rates":["1","1","1"],"n":2,"mu":[1],"t":"0"})");
    json out = run_ok("walk", payload);
    REQUIRE(out["weights"].size() == 1);
    CHECK(out["weights"][0][0] == json::parse("[1]"));
    CHECK(out["weights"][0][1] == "1");
}

TEST_CASE("schema errors carry JSON pointers and exit 2") {
    json out;
    int status = run_request("schur", json::parse(R"({"lambda":[1],"x":["1/2"]})"), out);
    CHECK(status == kExitSchemaError);
    CHECK(out["error"]["pointer"] == "/basis");

    status = run_request("schur",
                         json::parse(R"({"basis":{"kind":"monomial","N":6},"lambda":[1,"x"],"x":["1/2"]})"),
                         out);
    CHECK(status == kExitSchemaError);
    CHECK(out["error"]["pointer"] == "/lambda/1");

    status = run_request("schur",
                         json::parse(R"({"basis":{"kind":"monomial","N":6},"lambda":[1],"x":["1/0"]})"),
                         out);
    CHECK(status == kExitSchemaError);
    CHECK(out["error"]["pointer"] == "/x/0");

    status = run_request("nonsense", json::object(), out);
    CHECK(status == kExitSchemaError);
}

TEST_CASE("domain errors exit 1") {
    json out;
    // Repeated evaluation points: a singular Vandermonde.
    int status = run_request(
        "schur", json::parse(R"({"basis":{"kind":"sp","N":8},"lambda":[1],"x":["1","1"]})"), out);
    CHECK(status == kExitDomainError);
    CHECK(out["error"]["code"] == "domain");

    // Truncation too small for the requested partition.
    status = run_request(
        "schur", json::parse(R"({"basis":{"kind":"sp","N":3},"lambda":[4],"x":["1/2","1/3"]})"),
        out);
    CHECK(status == kExitDomainError);
}

TEST_CASE("custom bases through the JSON spec") {
    // Symplectic recursion given explicitly matches the builtin table.
    json payload = json::parse(R"({
      "basis": {"kind": "recursion", "N": 6, "data": [
        ["0","0","0","0","0","0"],
        ["1","0","0","0","0","0"],
        ["0","1","0","0","0","0"],
        ["0","0","1","0","0","0"],
        ["0","0","0","1","0","0"],
        ["0","0","0","0","1","0"]]},
      "lambda": [2,1], "x": ["1/2","1/3"]})");
    json builtin = json::parse(R"({"basis":{"kind":"sp","N":6},"lambda":[2,1],"x":["1/2","1/3"]})");
    CHECK(run_ok("schur", payload)["routes"] == run_ok("schur", builtin)["routes"]);

    json coeffs = json::parse(R"({
      "basis": {"kind": "coeffs", "data": [["1"],["0","1"],["-1","0","1"],["0","-2","0","1"],
                                            ["1","0","-3","0","1"],["0","3","0","-4","0","1"]]},
      "lambda": [2,1], "x": ["1/2","1/3"]})");
    CHECK(run_ok("schur", coeffs)["routes"] == run_ok("schur", builtin)["routes"]);
}

TEST_CASE("operation map covers every module operation exactly once") {
    const auto& map = operation_map();
    std::set<std::string> ops;
    std::set<std::string> subs(subcommands().begin(), subcommands().end());
    std::set<std::string> used;
    for (const auto& [op, sub] : map) {
        CHECK(ops.insert(op).second); // no duplicates
        CHECK(subs.count(sub) == 1);
        used.insert(sub);
    }
    CHECK(map.size() == 41);
    CHECK(used == subs); // every subcommand carries at least one operation
    for (const char* module :
         {"kernel.", "partitions.", "polybasis.", "schurgen.", "symfun.", "characters.",
          "tauseries.", "moments.", "walks.", "cli."}) {
        bool found = false;
        for (const auto& [op, sub] : map)
            if (op.rfind(module, 0) == 0) found = true;
        CHECK(found);
    }
}

TEST_CASE("identical requests produce byte-identical output") {
    json payload = json::parse(R"({"basis":{"kind":"so_odd","N":9},"lambda":[2,2],"x":["2/7","3/7"]})");
    json a, b;
    run_request("schur", payload, a);
    run_request("schur", payload, b);
    CHECK(dump_stable(a) == dump_stable(b));
}

TEST_CASE("golden corpus byte equality") {
    fs::path dir(GENSCHUR_GOLDEN_DIR);
    REQUIRE(fs::exists(dir));
    int count = 0;
    std::set<std::string> covered;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        std::string stem = entry.path().stem().string();
        if (stem.size() < 4 || stem.substr(0, 4) != "req_") continue;
        json req = json::parse(slurp(entry.path()));
        std::string sub = req.at("subcommand").get<std::string>();
        covered.insert(sub);
        json out;
        int status = run_request(sub, req.at("payload"), out);
        CHECK(status == req.at("status").get<int>());
        fs::path expected = entry.path();
        expected.replace_extension(".expected");
        CHECK(dump_stable(out) == slurp(expected));
        ++count;
    }
    CHECK(count >= 20);
    CHECK(covered == std::set<std::string>(subcommands().begin(), subcommands().end()));
}

} // TEST_SUITE
