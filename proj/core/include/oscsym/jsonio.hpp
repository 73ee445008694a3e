#pragma once

// JSON serialization: the matrix interchange schema and a deterministic
// emitter.  The emitter exists because reports must be byte-identical for
// identical inputs: keys come out sorted (nlohmann's default map ordering)
// and floats are printed with a fixed significant-digit count instead of
// shortest-roundtrip.

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "oscsym/exact.hpp"

namespace oscsym {

// {"n": 4, "entries": [[{"re":"1/2","im":"0"}, ...], ...]} with rationals
// as "p/q" strings.  Every dump/load path uses this shape.
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);
ExactMatrix matrix_from_json_text(const std::string& text);

// Renders with sorted keys, no whitespace, and floats at `sig_digits`
// significant digits (printf %g).  Integers print exactly.
std::string dump_deterministic(const nlohmann::json& j, int sig_digits = 15);

}  // namespace oscsym
