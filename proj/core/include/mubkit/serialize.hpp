#pragma once

#include <string>
#include <vector>

#include "mubkit/mub.hpp"

namespace mubkit {

/**
 * JSON wire format for bases (schema version 1).
 *
 * Top level: {"schema": 1, "d": ..., "mode": "exact"|"float", "bases": [...]}.
 * Exact entries carry {"omega_exponents": {"k": coeff, ...}, "scale_s": s};
 * float entries carry {"re": ..., "im": ...}. Exact-mode output contains no
 * floats at all and is byte-deterministic for a given input.
 */
std::string bases_to_json_text(const std::vector<Basis>& bases);
std::vector<Basis> bases_from_json_text(const std::string& text);

}  // namespace mubkit
