#include "derivring/serialize.hpp"

namespace derivring {
namespace {

// Position of byte offset `pos` in `text`, both 1-based.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t pos) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < pos && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::uint64_t unsigned_member(const Json& j, const char* key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_unsigned()) {
    throw ParseError(where + ": \"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::uint64_t residue(const Json& j, std::uint64_t m, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  const auto r = j.get<std::uint64_t>();
  if (r >= m) {
    throw ParseError(where + ": " + std::to_string(r) + " is not canonical modulo " + std::to_string(m));
  }
  return r;
}

Matrix checked_matrix(const Json& j, const RingDescriptor& ring, std::size_t n,
                      const std::string& where) {
  Matrix m = matrix_from_json(j);
  if (!(m.ring() == ring) || m.n() != n) throw ParseError(where + ": ring or dimension differs from the family");
  return m;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
}

Json ring_to_json(const RingDescriptor& ring) {
  Json zmod = {{"ring", "zmod"}, {"m", ring.modulus()}};
  if (!ring.is_poly()) return zmod;
  return {{"ring", "poly"}, {"base", zmod}};
}

RingDescriptor ring_from_json(const Json& j) {
  const Json& kind = member(j, "ring", "ring");
  if (kind == "zmod") return RingDescriptor::zmod(unsigned_member(j, "m", "ring"));
  if (kind == "poly") return RingDescriptor::poly_over(ring_from_json(member(j, "base", "ring")));
  throw ParseError("ring: unknown kind " + kind.dump());
}

Json value_to_json(const RingValue& v) {
  if (!v.ring().is_poly()) return v.coefficient(0);
  Json coeffs = Json::array();
  for (auto c : v.coefficients()) coeffs.push_back(c);
  return coeffs;
}

RingValue value_from_json(const RingDescriptor& ring, const Json& j) {
  const std::uint64_t m = ring.modulus();
  if (!ring.is_poly()) return RingValue::from_coefficients(ring, {residue(j, m, "value")});
  if (!j.is_array()) throw ParseError("value: polynomial must be a coefficient array");
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(residue(c, m, "value"));
  if (!coeffs.empty() && coeffs.back() == 0) throw ParseError("value: trailing zero coefficient is not canonical");
  return RingValue::from_coefficients(ring, std::move(coeffs));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= m.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= m.n(); ++j) row.push_back(value_to_json(m.entry(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"ring", ring_to_json(m.ring())}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  const std::uint64_t n = unsigned_member(j, "n", "matrix");
  if (n == 0) throw ParseError("matrix: n must be at least 1");
  const RingDescriptor ring = ring_from_json(member(j, "ring", "matrix"));
  const Json& rows = member(j, "rows", "matrix");
  if (!rows.is_array() || rows.size() != n) throw ParseError("matrix: \"rows\" must hold n rows");
  Matrix m(ring, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = rows[r];
    const std::string where = "matrix row " + std::to_string(r + 1);
    if (!row.is_array() || row.size() != n) throw ParseError(where + ": must hold n entries");
    for (std::size_t c = 0; c < n; ++c) {
      try {
        m.set(r + 1, c + 1, value_from_json(ring, row[c]));
      } catch (const ParseError& e) {
        throw ParseError("matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + e.what());
      }
    }
  }
  return m;
}

std::string dump_matrix(const Matrix& m) { return matrix_to_json(m).dump(); }

Matrix parse_matrix(std::string_view text) { return matrix_from_json(parse_json(text)); }

Json witness_family_to_json(const WitnessFamily& family) {
  Json offdiag = Json::array();
  for (std::size_t i = 1; i <= family.n(); ++i) {
    for (std::size_t j = 1; j <= family.n(); ++j) {
      if (i == j) continue;
      offdiag.push_back({{"i", i}, {"j", j}, {"a", matrix_to_json(family.offdiag(i, j))}});
    }
  }
  Json out = {{"n", family.n()}, {"ring", ring_to_json(family.ring())}, {"offdiag", std::move(offdiag)}};
  if (family.has_explicit_c()) out["c"] = matrix_to_json(family.c());
  return out;
}

WitnessFamily witness_family_from_json(const Json& j) {
  const std::size_t n = unsigned_member(j, "n", "family");
  const RingDescriptor ring = ring_from_json(member(j, "ring", "family"));
  WitnessFamily family(ring, n);
  const Json& offdiag = member(j, "offdiag", "family");
  if (!offdiag.is_array()) throw ParseError("family: \"offdiag\" must be an array");
  for (const auto& entry : offdiag) {
    const std::size_t i = unsigned_member(entry, "i", "family witness");
    const std::size_t k = unsigned_member(entry, "j", "family witness");
    try {
      family.set_offdiag(i, k, checked_matrix(member(entry, "a", "family witness"), ring, n, "family witness"));
    } catch (const DomainError& e) {
      throw ParseError(std::string("family witness: ") + e.what());
    }
  }
  if (auto it = j.find("c"); it != j.end()) family.set_c(checked_matrix(*it, ring, n, "family c"));
  return family;
}

Json jordan_family_to_json(const JordanWitnessFamily& family) {
  Json diag = Json::array();
  for (std::size_t i = 1; i <= family.n(); ++i) {
    diag.push_back({{"i", i}, {"d", matrix_to_json(family.diag(i))}});
  }
  return {{"n", family.n()}, {"ring", ring_to_json(family.ring())}, {"diag", std::move(diag)}};
}

JordanWitnessFamily jordan_family_from_json(const Json& j) {
  const std::size_t n = unsigned_member(j, "n", "jordan family");
  const RingDescriptor ring = ring_from_json(member(j, "ring", "jordan family"));
  JordanWitnessFamily family(ring, n);
  const Json& diag = member(j, "diag", "jordan family");
  if (!diag.is_array()) throw ParseError("jordan family: \"diag\" must be an array");
  for (const auto& entry : diag) {
    const std::size_t i = unsigned_member(entry, "i", "jordan witness");
    try {
      family.set_diag(i, checked_matrix(member(entry, "d", "jordan witness"), ring, n, "jordan witness"));
    } catch (const DomainError& e) {
      throw ParseError(std::string("jordan witness: ") + e.what());
    }
  }
  return family;
}

}  // namespace derivring
