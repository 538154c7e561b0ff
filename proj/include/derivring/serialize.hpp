#pragma once

// JSON encodings of rings, values, matrices and witness families.
//
//   ring:   {"ring":"zmod","m":5} | {"ring":"poly","base":{"ring":"zmod","m":5}}
//   value:  integer residue (zmod) | coefficient array, constant term first (poly)
//   matrix: {"n":2,"ring":<ring>,"rows":[[<value>,...],...]}
//
// Decoding is strict: every value must already be canonical (residues in [0, m), no
// trailing zero coefficients), so encode(decode(text)) reproduces canonical text exactly.

#include <string>
#include <string_view>

#include "json.hpp"

#include "derivring/jordan.hpp"
#include "derivring/twolocal.hpp"

namespace derivring {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);

Json ring_to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const Json& j);

Json value_to_json(const RingValue& v);
RingValue value_from_json(const RingDescriptor& ring, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Canonical compact text of a matrix.
std::string dump_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text);

/// {"n","ring","offdiag":[{"i","j","a":<matrix>}...],"c":<matrix>?}. Decoded families are
/// not validated.
Json witness_family_to_json(const WitnessFamily& family);
WitnessFamily witness_family_from_json(const Json& j);

/// {"n","ring","diag":[{"i","d":<matrix>}...]}.
Json jordan_family_to_json(const JordanWitnessFamily& family);
JordanWitnessFamily jordan_family_from_json(const Json& j);

}  // namespace derivring
