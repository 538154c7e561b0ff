#include "derivring/ring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace derivring {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % m);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<u128>(a) + m - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b, const char* op) {
  if (!(a == b)) {
    throw DomainError(std::string("ring mismatch in ") + op + ": " + a.to_string() + " vs " +
                      b.to_string());
  }
}

std::uint64_t parse_modulus(std::string_view text) {
  std::uint64_t m = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidRing("bad modulus '" + std::string(text) + "'");
  }
  return m;
}

}  // namespace

RingDescriptor RingDescriptor::zmod(std::uint64_t modulus) {
  if (modulus % 2 == 0) {
    throw InvalidRing("Z_" + std::to_string(modulus) +
                      " rejected: 2 is invertible only for an odd modulus");
  }
  if (modulus < 3) {
    throw InvalidRing("Z_" + std::to_string(modulus) + " rejected: modulus must be at least 3");
  }
  return RingDescriptor(Kind::ZMod, modulus);
}

RingDescriptor RingDescriptor::poly_over(const RingDescriptor& base) {
  if (base.kind() != Kind::ZMod) {
    throw InvalidRing("polynomial rings are only supported over Z_m");
  }
  return RingDescriptor(Kind::PolyOver, base.modulus());
}

RingDescriptor RingDescriptor::parse(std::string_view text) {
  constexpr std::string_view zmod_prefix = "zmod:";
  constexpr std::string_view poly_prefix = "poly:";
  if (text.starts_with(poly_prefix)) {
    return poly_over(parse(text.substr(poly_prefix.size())));
  }
  if (text.starts_with(zmod_prefix)) {
    return zmod(parse_modulus(text.substr(zmod_prefix.size())));
  }
  throw InvalidRing("unknown ring '" + std::string(text) + "' (expected zmod:M or poly:zmod:M)");
}

std::string RingDescriptor::to_string() const {
  std::string s = "zmod:" + std::to_string(modulus_);
  return is_poly() ? "poly:" + s : s;
}

RingValue RingValue::from_int(const RingDescriptor& ring, std::int64_t value) {
  const std::uint64_t m = ring.modulus();
  std::uint64_t r;
  if (value >= 0) {
    r = static_cast<std::uint64_t>(value) % m;
  } else {
    // |value| computed in unsigned arithmetic so INT64_MIN is fine.
    const std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
    r = sub_mod(0, mag % m, m);
  }
  RingValue v(ring);
  if (r != 0) v.coeffs_.push_back(r);
  return v;
}

RingValue RingValue::from_coefficients(const RingDescriptor& ring,
                                       std::vector<std::uint64_t> coeffs) {
  RingValue v(ring);
  v.coeffs_ = std::move(coeffs);
  v.canonicalize();
  if (!ring.is_poly() && v.coeffs_.size() > 1) {
    throw DomainError("Z_m value given with a nonconstant coefficient list");
  }
  return v;
}

RingValue RingValue::variable(const RingDescriptor& ring) {
  if (!ring.is_poly()) throw DomainError("the indeterminate t only exists in polynomial rings");
  return from_coefficients(ring, {0, 1});
}

void RingValue::canonicalize() {
  const std::uint64_t m = ring_.modulus();
  for (auto& c : coeffs_) c %= m;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string RingValue::to_string() const {
  if (!ring_.is_poly()) return std::to_string(coefficient(0));
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const std::uint64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0 || c != 1) out << c;
    if (k >= 1) out << 't';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

RingValue& RingValue::operator+=(const RingValue& rhs) {
  require_same_ring(ring_, rhs.ring_, "add");
  const std::uint64_t m = ring_.modulus();
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] = add_mod(coeffs_[k], rhs.coeffs_[k], m);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  return *this;
}

RingValue& RingValue::operator-=(const RingValue& rhs) {
  require_same_ring(ring_, rhs.ring_, "subtract");
  const std::uint64_t m = ring_.modulus();
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    coeffs_[k] = sub_mod(coeffs_[k], rhs.coeffs_[k], m);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  return *this;
}

RingValue operator*(const RingValue& lhs, const RingValue& rhs) {
  require_same_ring(lhs.ring_, rhs.ring_, "multiply");
  RingValue out(lhs.ring_);
  if (lhs.is_zero() || rhs.is_zero()) return out;
  const std::uint64_t m = lhs.ring_.modulus();
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = add_mod(out.coeffs_[i + j], mul_mod(lhs.coeffs_[i], rhs.coeffs_[j], m), m);
    }
  }
  // Z_m need not be a domain, so the leading product can vanish.
  while (!out.coeffs_.empty() && out.coeffs_.back() == 0) out.coeffs_.pop_back();
  return out;
}

RingValue& RingValue::operator*=(const RingValue& rhs) { return *this = *this * rhs; }

RingValue operator-(const RingValue& v) {
  RingValue out(v.ring_);
  const std::uint64_t m = v.ring_.modulus();
  out.coeffs_.reserve(v.coeffs_.size());
  for (auto c : v.coeffs_) out.coeffs_.push_back(sub_mod(0, c, m));
  return out;
}

RingValue half(const RingValue& a) {
  const std::uint64_t m = a.ring().modulus();
  // 2 * (m+1)/2 = m+1 = 1 (mod m); m is odd so (m+1)/2 does not overflow when computed as below.
  const std::uint64_t inverse_of_two = m / 2 + 1;
  std::vector<std::uint64_t> coeffs(a.coefficients().begin(), a.coefficients().end());
  for (auto& c : coeffs) c = mul_mod(c, inverse_of_two, m);
  return RingValue::from_coefficients(a.ring(), std::move(coeffs));
}

RingValue formal_derivative(const RingValue& p) {
  if (!p.ring().is_poly()) throw DomainError("formal derivative requires a polynomial ring");
  const std::uint64_t m = p.ring().modulus();
  auto coeffs = p.coefficients();
  std::vector<std::uint64_t> out;
  if (coeffs.size() > 1) out.resize(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    out[k - 1] = mul_mod(coeffs[k], k % m, m);
  }
  return RingValue::from_coefficients(p.ring(), std::move(out));
}

BaseDerivation BaseDerivation::zero(const RingDescriptor& ring) {
  return BaseDerivation(Kind::Zero, RingValue(ring));
}

BaseDerivation BaseDerivation::formal(const RingDescriptor& ring) {
  if (!ring.is_poly()) {
    throw DomainError("d/dt is unavailable on " + ring.to_string() +
                      ": the only derivation of Z_m is zero");
  }
  return BaseDerivation(Kind::FormalDerivative, RingValue::from_int(ring, 1));
}

BaseDerivation BaseDerivation::scaled(const RingValue& factor) {
  if (!factor.ring().is_poly()) {
    throw DomainError("f*d/dt is unavailable on " + factor.ring().to_string() +
                      ": the only derivation of Z_m is zero");
  }
  return BaseDerivation(Kind::ScaledFormalDerivative, factor);
}

BaseDerivation BaseDerivation::parse(const RingDescriptor& ring, std::string_view text) {
  if (text == "zero" || text == "0") return zero(ring);
  if (text == "d/dt") return formal(ring);
  if (text == "t*d/dt") return scaled(RingValue::variable(ring));
  throw DomainError("unknown derivation '" + std::string(text) +
                    "' (expected zero, d/dt or t*d/dt)");
}

std::string BaseDerivation::to_string() const {
  switch (kind_) {
    case Kind::Zero:
      return "zero";
    case Kind::FormalDerivative:
      return "d/dt";
    case Kind::ScaledFormalDerivative:
      return "(" + factor_.to_string() + ")*d/dt";
  }
  return {};
}

RingValue BaseDerivation::operator()(const RingValue& p) const {
  require_same_ring(ring(), p.ring(), "derivation");
  switch (kind_) {
    case Kind::Zero:
      return RingValue(p.ring());
    case Kind::FormalDerivative:
      return formal_derivative(p);
    case Kind::ScaledFormalDerivative:
      return factor_ * formal_derivative(p);
  }
  return RingValue(p.ring());
}

}  // namespace derivring
