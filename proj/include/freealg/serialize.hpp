#pragma once

/*
 * Structured (JSON) forms of the library values. A polynomial is an array
 * of term objects, lex-descending:
 *
 *   [{"word": "YX", "coeff": "1"}, {"word": "XY", "coeff": "-1"}]
 *
 * Words are letter strings and the empty word is "1"; coefficients are
 * exact "p/q" strings. All objects preserve insertion order, so identical
 * inputs serialize to identical bytes.
 */

#include "freealg/generators.hpp"

#include <json.hpp>

namespace freealg {

using OrderedJson = nlohmann::ordered_json;

OrderedJson poly_to_json(const NCPoly& p);
NCPoly poly_from_json(const OrderedJson& j);

OrderedJson formal_to_json(const FormalPoly& fp, const GeneratorTable& table);
OrderedJson table_to_json(const GeneratorTable& table, bool include_values);

// generic deterministic text rendering of a report document
void render_text(const OrderedJson& v, std::ostream& out, int indent = 0);

}  // namespace freealg
