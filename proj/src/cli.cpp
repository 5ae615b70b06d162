#include "genschur/cli.hpp"

#include <algorithm>

#include "genschur/errors.hpp"
#include "genschur/tauseries.hpp"
#include "genschur/verify.hpp"
#include "genschur/walks.hpp"

namespace genschur {

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> subs{"schur",      "expand", "verify",
                                               "character",  "littlewood", "tau",
                                               "moments",    "walk",   "partitions"};
    return subs;
}

std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

namespace {

json weights_json(const std::map<Partition, Rational, PartitionOrder>& w) {
    json a = json::array();
    for (const auto& [lam, v] : w) a.push_back(json::array({partition_json(lam), rat_str(v)}));
    return a;
}

json run_schur(const json& p, const CliOverrides& ov) {
    PolyBasis basis = parse_basis(require_field(p, "basis", ""), "/basis", ov.truncation);
    Partition lambda = parse_partition(require_field(p, "lambda", ""), "/lambda");
    std::vector<Rational> x = parse_rational_array(require_field(p, "x", ""), "/x");
    FourRoutes fr = four_routes(basis, lambda, x);
    json out;
    out["partition"] = partition_json(lambda);
    out["n"] = x.size();
    out["routes"] = {{"bialternant", rat_str(fr.bialternant)},
                     {"jacobi_trudi", rat_str(fr.jacobi_trudi)},
                     {"dual", rat_str(fr.dual)},
                     {"giambelli", rat_str(fr.giambelli)}};
    out["agree"] = fr.agree;
    return out;
}

json run_expand(const json& p, const CliOverrides& ov) {
    PolyBasis basis = parse_basis(require_field(p, "basis", ""), "/basis", ov.truncation);
    Partition lambda = parse_partition(require_field(p, "lambda", ""), "/lambda");
    int n = static_cast<int>(require_int(require_field(p, "n", ""), "/n"));
    SchurExpansion e = expansion_coeffs(basis, lambda, n);
    json out;
    out["partition"] = partition_json(lambda);
    out["n"] = n;
    out["coefficients"] = expansion_json(e);
    return out;
}

json run_character(const json& p, const CliOverrides&) {
    Group g = group_from_tag(require_string(require_field(p, "group", ""), "/group"));
    Partition lambda = parse_partition(require_field(p, "lambda", ""), "/lambda");
    json out;
    out["group"] = group_tag(g);
    out["partition"] = partition_json(lambda);
    bool did = false;
    if (p.contains("x")) {
        TorusPoint tp(parse_rational_array(p["x"], "/x"));
        out["value"] = rat_str(character(g, lambda, tp));
        did = true;
    }
    if (p.contains("n")) {
        int n = static_cast<int>(require_int(p["n"], "/n"));
        out["n"] = n;
        out["coefficients"] = expansion_json(schur_expansion_z(g, lambda, n));
        did = true;
    }
    if (!did) throw schema_error("", "character needs \"x\" (value) and/or \"n\" (expansion)");
    return out;
}

json run_littlewood(const json& p, const CliOverrides& ov) {
    Group g = group_from_tag(require_string(require_field(p, "group", ""), "/group"));
    Partition lambda = parse_partition(require_field(p, "lambda", ""), "/lambda");
    TorusPoint tp(parse_rational_array(require_field(p, "x", ""), "/x"));
    long cutoff = optional_int(p, "cutoff", std::max(lambda.weight(), 1));
    if (ov.cutoff >= 0) cutoff = ov.cutoff;
    Rational rhs = littlewood_rhs(g, lambda, tp, static_cast<int>(cutoff));
    Rational chi = character(g, lambda, tp);
    json out;
    out["group"] = group_tag(g);
    out["partition"] = partition_json(lambda);
    out["littlewood_rhs"] = rat_str(rhs);
    out["character"] = rat_str(chi);
    out["agree"] = (rhs == chi);
    return out;
}

json run_tau(const json& p, const CliOverrides& ov) {
    PolyBasis basis = parse_basis(require_field(p, "basis", ""), "/basis", ov.truncation);
    int n = static_cast<int>(require_int(require_field(p, "n", ""), "/n"));
    FlowVector t = parse_rational_array(require_field(p, "t", ""), "/t");
    FlowVector s = parse_rational_array(require_field(p, "s", ""), "/s");
    long cutoff = optional_int(p, "cutoff", 4);
    if (ov.cutoff >= 0) cutoff = ov.cutoff;
    TauValue tv;
    if (p.contains("theta")) {
        PolyBasis theta = parse_basis(p["theta"], "/theta", ov.truncation);
        tv = tau_pair(basis, theta, n, t, s, static_cast<int>(cutoff));
    } else {
        tv = tau_phi(basis, n, t, s, static_cast<int>(cutoff));
    }
    json out;
    out["value"] = rat_str(tv.value);
    out["terms"] = tv.terms;
    out["cutoff"] = cutoff;
    return out;
}

json run_moments(const json& p, const CliOverrides& ov) {
    std::string op = require_string(require_field(p, "op", ""), "/op");
    json out;
    out["op"] = op;
    if (op == "hankel") {
        DiscreteMeasure mu = parse_measure(require_field(p, "measure", ""), "/measure");
        int size = static_cast<int>(require_int(require_field(p, "size", ""), "/size"));
        out["matrix"] = matrix_json(hankel(mu, size));
    } else if (op == "b_coefficient") {
        DiscreteMeasure mu = parse_measure(require_field(p, "measure", ""), "/measure");
        Partition lambda = parse_partition(require_field(p, "lambda", ""), "/lambda");
        int n = static_cast<int>(require_int(require_field(p, "n", ""), "/n"));
        out["value"] = rat_str(B_coefficient(mu, lambda, n));
    } else if (op == "eigenvalue_sum") {
        DiscreteMeasure mu = parse_measure(require_field(p, "measure", ""), "/measure");
        int n = static_cast<int>(require_int(require_field(p, "n", ""), "/n"));
        FlowVector t;
        if (p.contains("t")) t = parse_rational_array(p["t"], "/t");
        long cutoff = optional_int(p, "cutoff", 4);
        if (ov.cutoff >= 0) cutoff = ov.cutoff;
        out["value"] = rat_str(eigenvalue_sum(mu, n, t, static_cast<int>(cutoff)));
    } else if (op == "bimoment") {
        BiMeasure mu2 = parse_bimeasure(require_field(p, "bimeasure", ""), "/bimeasure");
        int size = static_cast<int>(require_int(require_field(p, "size", ""), "/size"));
        out["matrix"] = matrix_json(bimoment(mu2, size));
    } else if (op == "b2_coefficient") {
        BiMeasure mu2 = parse_bimeasure(require_field(p, "bimeasure", ""), "/bimeasure");
        Partition lambda = parse_partition(require_field(p, "lambda", ""), "/lambda");
        Partition nu = parse_partition(require_field(p, "nu", ""), "/nu");
        int n = static_cast<int>(require_int(require_field(p, "n", ""), "/n"));
        out["value"] = rat_str(B2_coefficient(mu2, lambda, nu, n));
    } else if (op == "orthogonal") {
        DiscreteMeasure mu = parse_measure(require_field(p, "measure", ""), "/measure");
        int k = static_cast<int>(require_int(require_field(p, "k", ""), "/k"));
        PolyBasis basis = monic_orthogonal(mu, k);
        json rows = json::array();
        for (int i = 0; i < k; ++i) {
            json row = json::array();
            for (int j = 0; j <= i; ++j) row.push_back(rat_str(basis.coeff(i, j)));
            rows.push_back(row);
        }
        out["coeffs"] = rows;
    } else {
        throw schema_error("/op", "unknown moments op '" + op + "'");
    }
    return out;
}

json run_walk(const json& p, const CliOverrides&) {
    RateSpec rates(parse_rational_array(require_field(p, "rates", ""), "/rates"));
    int n = static_cast<int>(require_int(require_field(p, "n", ""), "/n"));
    Partition mu = parse_partition(require_field(p, "mu", ""), "/mu");
    json out;
    out["mu"] = partition_json(mu);
    out["n"] = n;
    if (p.contains("steps")) {
        int steps = static_cast<int>(require_int(p["steps"], "/steps"));
        DiscreteWeights dw = discrete_time_weights(rates, mu, n, steps);
        out["steps"] = steps;
        out["normalized"] = true;
        out["absorbing"] = dw.absorbing;
        out["weights"] = weights_json(dw.weights);
        return out;
    }
    Rational t = parse_rational(require_field(p, "t", ""), "/t");
    out["t"] = rat_str(t);
    out["normalized"] = false;
    if (p.contains("lambda")) {
        Partition lambda = parse_partition(p["lambda"], "/lambda");
        out["lambda"] = partition_json(lambda);
        out["weight"] = rat_str(transition_weight(rates, lambda, mu, n, t));
        return out;
    }
    std::map<Partition, Rational, PartitionOrder> table;
    int span = rates.truncation() - 1; // largest reachable coordinate gain
    for (const Partition& lam : reachable_states(rates, mu, n, span * n)) {
        Rational w = transition_weight(rates, lam, mu, n, t);
        if (w != 0) table[lam] = w;
    }
    out["weights"] = weights_json(table);
    return out;
}

json run_partitions(const json& p, const CliOverrides&) {
    std::string op = require_string(require_field(p, "op", ""), "/op");
    json out;
    out["op"] = op;
    if (op == "enumerate") {
        int w = static_cast<int>(require_int(require_field(p, "max_weight", ""), "/max_weight"));
        int l = static_cast<int>(optional_int(p, "max_length", w));
        json a = json::array();
        for (const Partition& q : enumerate_partitions(w, l)) a.push_back(partition_json(q));
        out["partitions"] = a;
    } else if (op == "conjugate") {
        Partition lam = parse_partition(require_field(p, "lambda", ""), "/lambda");
        out["conjugate"] = partition_json(lam.conjugate());
    } else if (op == "frobenius") {
        Partition lam = parse_partition(require_field(p, "lambda", ""), "/lambda");
        Frobenius f = frobenius(lam);
        out["arms"] = f.arms;
        out["legs"] = f.legs;
    } else if (op == "from_frobenius") {
        Frobenius f;
        f.arms = parse_int_array(require_field(p, "arms", ""), "/arms");
        f.legs = parse_int_array(require_field(p, "legs", ""), "/legs");
        out["partition"] = partition_json(from_frobenius(f));
    } else if (op == "doubles") {
        std::vector<int> alpha = parse_int_array(require_field(p, "alpha", ""), "/alpha");
        auto [d, dp] = doubles(alpha);
        out["D"] = partition_json(d);
        out["Dprime"] = partition_json(dp);
    } else if (op == "particle_coords") {
        Partition lam = parse_partition(require_field(p, "lambda", ""), "/lambda");
        int n = static_cast<int>(require_int(require_field(p, "n", ""), "/n"));
        int len = static_cast<int>(optional_int(p, "len", n));
        out["coords"] = lam.particle_coords(n, len);
    } else {
        throw schema_error("/op", "unknown partitions op '" + op + "'");
    }
    return out;
}

json report_json(const CheckReport& r) {
    json out;
    out["kind"] = r.name;
    out["pass"] = r.pass;
    out["cases"] = r.cases;
    if (!r.pass) out["detail"] = r.detail;
    return out;
}

json run_verify(const json& p, const CliOverrides& ov, bool& pass) {
    // Single-case form: verify the four determinantal routes of one value.
    if (p.contains("lambda")) {
        PolyBasis basis = parse_basis(require_field(p, "basis", ""), "/basis", ov.truncation);
        Partition lambda = parse_partition(p["lambda"], "/lambda");
        std::vector<Rational> x = parse_rational_array(require_field(p, "x", ""), "/x");
        FourRoutes fr = four_routes(basis, lambda, x);
        json out;
        out["kind"] = "four_route";
        out["partition"] = partition_json(lambda);
        out["routes"] = {{"bialternant", rat_str(fr.bialternant)},
                         {"jacobi_trudi", rat_str(fr.jacobi_trudi)},
                         {"dual", rat_str(fr.dual)},
                         {"giambelli", rat_str(fr.giambelli)}};
        out["agree"] = fr.agree;
        out["value"] = rat_str(fr.bialternant);
        pass = fr.agree;
        return out;
    }
    std::string kind = require_string(require_field(p, "kind", ""), "/kind");
    SweepConfig cfg;
    cfg.max_weight = static_cast<int>(optional_int(p, "max_weight", 4));
    cfg.points = static_cast<int>(optional_int(p, "points", 2));
    cfg.seed = static_cast<std::uint64_t>(optional_int(p, "seed", 0));
    if (ov.seed >= 0) cfg.seed = static_cast<std::uint64_t>(ov.seed);
    if (p.contains("ns")) {
        cfg.ns.clear();
        for (int v : parse_int_array(p["ns"], "/ns")) cfg.ns.push_back(v);
    } else {
        cfg.ns = {1, 2};
    }

    CheckReport r;
    if (kind == "four_route") r = sweep_four_route(cfg);
    else if (kind == "grassmannian")
        r = sweep_grassmannian(cfg, static_cast<int>(optional_int(p, "depth", 6)));
    else if (kind == "duality") r = sweep_duality(cfg);
    else if (kind == "cauchy_binet") r = sweep_cauchy_binet(cfg);
    else if (kind == "characters") r = sweep_characters();
    else if (kind == "pluecker") r = sweep_pluecker(cfg);
    else if (kind == "moments") r = sweep_moments();
    else if (kind == "walks") r = sweep_walks();
    else if (kind == "window_recursion") {
        std::string basis = p.contains("basis") && p["basis"].is_string()
                                ? p["basis"].get<std::string>()
                                : std::string("sp");
        int n = static_cast<int>(optional_int(p, "n", 2));
        int kmax = static_cast<int>(optional_int(p, "kmax", 3));
        long trunc = optional_int(p, "truncation", n + kmax + 3);
        if (ov.truncation > 0) trunc = ov.truncation;
        r = sweep_window_recursion(basis, static_cast<int>(trunc), n, kmax, cfg.seed);
    } else {
        throw schema_error("/kind", "unknown verify kind '" + kind + "'");
    }
    pass = r.pass;
    return report_json(r);
}

} // namespace

const std::vector<std::pair<std::string, std::string>>& operation_map() {
    static const std::vector<std::pair<std::string, std::string>> map{
        {"kernel.det", "schur"},
        {"kernel.invert_unitriangular", "schur"},
        {"kernel.exp_nilpotent", "walk"},
        {"partitions.conjugate", "partitions"},
        {"partitions.particle_coords", "partitions"},
        {"partitions.frobenius", "partitions"},
        {"partitions.enumerate", "partitions"},
        {"partitions.doubles", "partitions"},
        {"polybasis.monomial_basis", "schur"},
        {"polybasis.from_recursion", "schur"},
        {"polybasis.recursion_of", "verify"},
        {"polybasis.evaluate", "schur"},
        {"polybasis.window", "verify"},
        {"schurgen.bialternant", "schur"},
        {"schurgen.expansion_coeffs", "expand"},
        {"schurgen.build_H", "schur"},
        {"schurgen.jacobi_trudi", "schur"},
        {"schurgen.build_E", "schur"},
        {"schurgen.dual_jacobi_trudi", "schur"},
        {"schurgen.giambelli", "schur"},
        {"schurgen.pluecker_check", "verify"},
        {"symfun.monomial_sums", "tau"},
        {"symfun.complete_h", "tau"},
        {"symfun.schur_t", "tau"},
        {"symfun.littlewood_richardson", "littlewood"},
        {"characters.character", "character"},
        {"characters.littlewood_rhs", "littlewood"},
        {"characters.schur_expansion_z", "character"},
        {"tauseries.tau_phi", "tau"},
        {"tauseries.tau_pair", "tau"},
        {"tauseries.kp_coefficient_check", "verify"},
        {"moments.hankel", "moments"},
        {"moments.B_coefficient", "moments"},
        {"moments.eigenvalue_sum", "moments"},
        {"moments.bimoment_B2", "moments"},
        {"moments.monic_orthogonal", "moments"},
        {"walks.generator", "walk"},
        {"walks.transition_weight", "walk"},
        {"walks.semigroup_check", "verify"},
        {"walks.discrete_time_weights", "walk"},
        {"cli.run", "verify"},
    };
    return map;
}

int run_request(const std::string& subcommand, const json& payload, json& out,
                const CliOverrides& overrides) {
    try {
        if (!payload.is_object()) throw schema_error("", "payload must be a JSON object");
        if (subcommand == "schur") out = run_schur(payload, overrides);
        else if (subcommand == "expand") out = run_expand(payload, overrides);
        else if (subcommand == "character") out = run_character(payload, overrides);
        else if (subcommand == "littlewood") out = run_littlewood(payload, overrides);
        else if (subcommand == "tau") out = run_tau(payload, overrides);
        else if (subcommand == "moments") out = run_moments(payload, overrides);
        else if (subcommand == "walk") out = run_walk(payload, overrides);
        else if (subcommand == "partitions") out = run_partitions(payload, overrides);
        else if (subcommand == "verify") {
            bool pass = false;
            out = run_verify(payload, overrides, pass);
            return pass ? kExitOk : kExitVerifyFailed;
        } else {
            throw schema_error("", "unknown subcommand '" + subcommand + "'");
        }
        return kExitOk;
    } catch (const schema_error& e) {
        out = json{{"error", {{"code", "schema"}, {"pointer", e.pointer}, {"message", e.what()}}}};
        return kExitSchemaError;
    } catch (const domain_error& e) {
        out = json{{"error", {{"code", "domain"}, {"message", e.what()}}}};
        return kExitDomainError;
    } catch (const std::exception& e) {
        out = json{{"error", {{"code", "internal"}, {"message", e.what()}}}};
        return kExitDomainError;
    }
}

} // namespace genschur
