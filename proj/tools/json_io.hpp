#pragma once

#include <string>

#include <json.hpp>

#include "kltan/error.hpp"
#include "kltan/hecke.hpp"
#include "kltan/rootsys.hpp"
#include "kltan/rt_ring.hpp"
#include "kltan/subword.hpp"
#include "kltan/tangent.hpp"
#include "kltan/weyl.hpp"

namespace kltan::io {

using nlohmann::json;

// Bumped whenever a field is renamed, removed or changes meaning.
inline constexpr int kSchemaVersion = 1;

// {"schema_version": ..., "command": command}; every document starts here.
json envelope(const std::string& command);

json word_json(const Word& w);
Word word_from_json(const json& j);

// {"coeffs": [...], "root": "a1+a2"}
json weight_json(const RootSystem& rs, const LatticeVector& v);

// {"word": canonical reduced word, "length": l}
json element_json(const RootSystem& rs, const WeylElement& x);

// [{"exponent": [...], "coeff": "decimal"}], exponents in ascending order.
json poly_json(const LaurentPoly& p);
LaurentPoly poly_from_json(int rank, const json& j);

json index_sequence_json(const IndexSequence& t);

json report_json(const RootSystem& rs, const TangentReport& r);
json demazure_json(const RootSystem& rs, const HeckeWordStats& st);
json complex_json(const RootSystem& rs, const SubwordComplex& c, const EulerCharacteristics& chi);

json error_json(const std::string& command, ErrorKind kind, const std::string& message);

// Two-space indent, keys sorted, trailing newline.
std::string dump(const json& j);

}  // namespace kltan::io
