#include "genschur/json_io.hpp"

#include "genschur/errors.hpp"

namespace genschur {

const json& require_field(const json& obj, const std::string& key, const std::string& ptr) {
    if (!obj.is_object()) throw schema_error(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw schema_error(ptr + "/" + key, "missing required field");
    return *it;
}

long require_int(const json& v, const std::string& ptr) {
    if (!v.is_number_integer()) throw schema_error(ptr, "expected an integer");
    return v.get<long>();
}

std::string require_string(const json& v, const std::string& ptr) {
    if (!v.is_string()) throw schema_error(ptr, "expected a string");
    return v.get<std::string>();
}

bool optional_bool(const json& obj, const std::string& key, bool fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) throw schema_error("/" + key, "expected a boolean");
    return it->get<bool>();
}

long optional_int(const json& obj, const std::string& key, long fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    return require_int(*it, "/" + key);
}

Rational parse_rational(const json& v, const std::string& ptr) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) return rat_parse(v.get<std::string>());
    } catch (const shape_error& e) {
        throw schema_error(ptr, e.what());
    }
    throw schema_error(ptr, "expected a rational as \"p/q\" string or integer");
}

std::vector<Rational> parse_rational_array(const json& v, const std::string& ptr) {
    if (!v.is_array()) throw schema_error(ptr, "expected an array of rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_rational(v[i], ptr + "/" + std::to_string(i)));
    return out;
}

std::vector<int> parse_int_array(const json& v, const std::string& ptr) {
    if (!v.is_array()) throw schema_error(ptr, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(static_cast<int>(require_int(v[i], ptr + "/" + std::to_string(i))));
    return out;
}

Partition parse_partition(const json& v, const std::string& ptr) {
    std::vector<int> parts = parse_int_array(v, ptr);
    // [0] is accepted as an explicit spelling of the zero partition.
    if (parts.size() == 1 && parts[0] == 0) parts.clear();
    try {
        return Partition(parts);
    } catch (const shape_error& e) {
        throw schema_error(ptr, e.what());
    }
}

PolyBasis parse_basis(const json& v, const std::string& ptr, long truncation_override) {
    std::string kind = require_string(require_field(v, "kind", ptr), ptr + "/kind");
    if (kind == "monomial" || kind == "sp" || kind == "so_even" || kind == "so_odd") {
        long n = require_int(require_field(v, "N", ptr), ptr + "/N");
        if (truncation_override > 0) n = truncation_override;
        if (n < 1) throw schema_error(ptr + "/N", "truncation must be >= 1");
        if (kind == "monomial") return PolyBasis::monomial(static_cast<int>(n));
        if (kind == "sp") return PolyBasis::sp(static_cast<int>(n));
        if (kind == "so_even") return PolyBasis::so_even(static_cast<int>(n));
        return PolyBasis::so_odd(static_cast<int>(n));
    }
    if (kind == "recursion") {
        const json& data = require_field(v, "data", ptr);
        if (!data.is_array() || data.empty())
            throw schema_error(ptr + "/data", "expected a non-empty array of rows");
        std::size_t n = data.size();
        Matrix jp(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto row = parse_rational_array(data[i], ptr + "/data/" + std::to_string(i));
            if (row.size() != n)
                throw schema_error(ptr + "/data/" + std::to_string(i),
                                   "recursion rows must all have length N");
            for (std::size_t j = 0; j < n; ++j) jp(i, j) = row[j];
        }
        return PolyBasis::from_recursion(jp);
    }
    if (kind == "coeffs") {
        const json& data = require_field(v, "data", ptr);
        if (!data.is_array() || data.empty())
            throw schema_error(ptr + "/data", "expected a non-empty array of rows");
        std::size_t n = data.size();
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto row = parse_rational_array(data[i], ptr + "/data/" + std::to_string(i));
            if (row.size() != i + 1 && row.size() != n)
                throw schema_error(ptr + "/data/" + std::to_string(i),
                                   "row i must list the i+1 lower-triangular coefficients");
            for (std::size_t j = 0; j < row.size(); ++j) a(i, j) = row[j];
        }
        return PolyBasis::from_coeffs(a);
    }
    throw schema_error(ptr + "/kind", "unknown basis kind '" + kind + "'");
}

DiscreteMeasure parse_measure(const json& v, const std::string& ptr) {
    auto nodes = parse_rational_array(require_field(v, "nodes", ptr), ptr + "/nodes");
    auto weights = parse_rational_array(require_field(v, "weights", ptr), ptr + "/weights");
    return DiscreteMeasure(std::move(nodes), std::move(weights));
}

BiMeasure parse_bimeasure(const json& v, const std::string& ptr) {
    const json& pts = require_field(v, "points", ptr);
    if (!pts.is_array()) throw schema_error(ptr + "/points", "expected an array of triples");
    BiMeasure bm;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string p = ptr + "/points/" + std::to_string(i);
        auto triple = parse_rational_array(pts[i], p);
        if (triple.size() != 3) throw schema_error(p, "expected [z, w, weight]");
        bm.points.push_back({triple[0], triple[1], triple[2]});
    }
    return bm;
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}

json rational_json(const Rational& q) { return rat_str(q); }

json expansion_json(const SchurExpansion& e) {
    json a = json::array();
    for (const auto& [mu, c] : e) a.push_back(json::array({partition_json(mu), rat_str(c)}));
    return a;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json flow_json(const FlowVector& t) {
    json a = json::array();
    for (const Rational& v : t) a.push_back(rat_str(v));
    return a;
}

} // namespace genschur
