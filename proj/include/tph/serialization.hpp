#pragma once

#include <json.hpp>
#include <string>

#include "tph/hardy.hpp"
#include "tph/pc_fredholm.hpp"
#include "tph/rational_symbol.hpp"

namespace tph {

using Json = nlohmann::json;

/// {"laurent": [[k, re, im], ...]} or {"rational": {"num": [...], "den": [...]}}.
/// Throws ParseError on anything else.
RationalSymbol symbol_from_json(const Json& j);
/// Laurent form when the denominator is constant, rational form otherwise.
Json symbol_to_json(const RationalSymbol& s);

/// {"arcs": [[angle, re, im], ...]}. ParseError for a wrong shape,
/// InvalidSymbol for arcs that are out of range or out of order.
PCSymbol pc_symbol_from_json(const Json& j);
Json pc_symbol_to_json(const PCSymbol& s);

/// Coefficient triples of num and den plus the first `taylor_terms` Taylor
/// coefficients as [re, im] pairs.
Json hardy_to_json(const HardyFunction& f, int taylor_terms = 16);

Json cplx_to_json(cplx z);

/// Compact JSON with keys in lexicographic order, floats as %.17g and
/// non-finite floats as the strings "inf", "-inf", "nan". Parsing the output
/// and writing it again reproduces it byte for byte.
std::string canonical_dump(const Json& j);

}  // namespace tph
