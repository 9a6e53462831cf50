#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "gbk/cocycle.hpp"
#include "gbk/gbimod.hpp"

namespace gbk {

// nlohmann's default json keeps object keys in std::map order, which gives us
// canonical (sorted) key ordering on every dump for free.
using Json = nlohmann::json;

// A parsed and fully validated input file. The raw blocks are kept in
// canonical form (decimal-string integers, canonical scalar encodings, sorted
// sparse entries) so that emit_spec(parse_spec(text)) is a fixed point; the
// constructed objects are what the pipelines actually run on.
struct SpecFile {
    std::string version;
    std::map<std::string, Json> algebra_blocks;
    std::map<std::string, Json> bimodule_blocks;
    Json task;
    std::map<std::string, AlgPtr> algebras;
    std::map<std::string, BimodPtr> bimodules;
};

// Strict parser: unknown fields, dangling references, malformed literals and
// out-of-range indices all raise InputError. Construction of the referenced
// algebras and bimodules runs their full validating constructors, so a file
// that parses is already mathematically well formed. Declared dimensions
// above max_dim are rejected before construction.
SpecFile parse_spec(const std::string& text, long max_dim = 128);

// Canonical serialization of a parsed file; stable byte-for-byte.
std::string emit_spec(const SpecFile& s);

// Scalar encoding: integers and rationals as decimal strings ("5", "-3/4"),
// roots of unity as "zeta(N,k)" (accepted on input only), and general
// cyclotomics as {"order": "N", "coeffs": [["num","den"], ...]} on the power
// basis. Emission picks the rational string when the value is rational and
// the object form otherwise.
Json scalar_to_json(const Cyclotomic& c);
Cyclotomic scalar_from_json(const Json& j, const std::string& where);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, long dim, const std::string& where);

// Cocycle block: {"group": literal, "values": {"(x,y)": scalar, ...}} with
// omitted pairs defaulting to 1. Canonical form drops explicit 1 entries.
Cocycle cocycle_from_json(const Json& block, const std::string& where);
Json cocycle_to_json(const Cocycle& c);

// Canonical decimal string for a nonnegative machine integer.
std::string int_str(long v);
// Accepts a JSON integral number or a decimal string.
long int_from_json(const Json& j, const std::string& where);

} // namespace gbk
