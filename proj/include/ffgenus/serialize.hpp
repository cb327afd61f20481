#ifndef FFGENUS_SERIALIZE_HPP
#define FFGENUS_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "ffgenus/chars.hpp"
#include "ffgenus/extdesc.hpp"
#include "ffgenus/genus.hpp"
#include "ffgenus/oracle.hpp"
#include "ffgenus/ramify.hpp"

namespace ffgenus {

using json = nlohmann::ordered_json;

// Polynomials are ascending coefficient lists of element codes in [0, q); single
// elements of F_q are base-p digit lists of length l; rational functions are
// {"num": poly, "den": poly}; Witt vectors are lists of rational functions.
// Every parser throws schema_error on malformed input.

json poly_to_json(const Poly& f);
Poly poly_from_json(const json& j, GroundField F);
json fq_to_json(const Fq& a);
Fq fq_from_json(const json& j, GroundField F);
json ratfn_to_json(const RatFn& a);
RatFn ratfn_from_json(const json& j, GroundField F);
json witt_to_json(const WittRF& x);
WittRF witt_from_json(const json& j, GroundField F);

GroundField field_from_json(const json& j);
json field_to_json(GroundField F);

/// {"kind": "kummer" | "asw" | "cyclotomic" | "composite" | "constant", ...}
json descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const json& j, GroundField F);

json to_json(const RamificationReport& r);
json to_json(const GenusFieldReport& r);
json to_json(const ConductorReport& r);
json to_json(const OracleVerdict& v);
json to_json(const UnitGroup& G);

std::string to_text(const RamificationReport& r);
std::string to_text(const GenusFieldReport& r);
std::string to_text(const ConductorReport& r);
std::string to_text(const OracleVerdict& v);
std::string to_text(const UnitGroup& G);

}  // namespace ffgenus

#endif
