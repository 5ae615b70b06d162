#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "genschur/characters.hpp"
#include "genschur/moments.hpp"
#include "genschur/partition.hpp"
#include "genschur/polybasis.hpp"
#include "genschur/rational.hpp"
#include "genschur/schurgen.hpp"
#include "genschur/symfun.hpp"

namespace genschur {

using json = nlohmann::ordered_json;

// Payload validation failure; `pointer` is the JSON-pointer path of the
// offending element. The CLI maps these to exit code 2.
struct schema_error : std::runtime_error {
    std::string pointer;
    schema_error(std::string ptr, const std::string& message)
        : std::runtime_error(message), pointer(std::move(ptr)) {}
};

const json& require_field(const json& obj, const std::string& key, const std::string& ptr);
long require_int(const json& v, const std::string& ptr);
std::string require_string(const json& v, const std::string& ptr);
bool optional_bool(const json& obj, const std::string& key, bool fallback);
long optional_int(const json& obj, const std::string& key, long fallback);

Rational parse_rational(const json& v, const std::string& ptr);
std::vector<Rational> parse_rational_array(const json& v, const std::string& ptr);
Partition parse_partition(const json& v, const std::string& ptr);
std::vector<int> parse_int_array(const json& v, const std::string& ptr);

/// Basis spec {"kind": "monomial"|"sp"|"so_even"|"so_odd"|"recursion"|"coeffs",
/// "N": int, "data": ...}. truncation_override > 0 replaces N for the named
/// kinds (data-driven kinds keep their own size).
PolyBasis parse_basis(const json& v, const std::string& ptr, long truncation_override = 0);

/// Measure spec {"nodes": [...], "weights": [...]}.
DiscreteMeasure parse_measure(const json& v, const std::string& ptr);

/// Bimeasure spec {"points": [["z","w","wt"], ...]}.
BiMeasure parse_bimeasure(const json& v, const std::string& ptr);

json partition_json(const Partition& p);
json rational_json(const Rational& q);
json expansion_json(const SchurExpansion& e); // array of [partition, value]
json matrix_json(const Matrix& m);
json flow_json(const FlowVector& t);

} // namespace genschur
