#pragma once

// Exact arithmetic in Z_m (m odd) and Z_m[t], plus derivations on those rings.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "derivring/errors.hpp"

namespace derivring {

/// Identifies one of the supported commutative rings. Two is always invertible.
class RingDescriptor {
 public:
  enum class Kind { ZMod, PolyOver };

  /// Z_m. Throws InvalidRing unless m is odd and at least 3.
  static RingDescriptor zmod(std::uint64_t modulus);
  /// Z_m[t]. The base must be a ZMod descriptor.
  static RingDescriptor poly_over(const RingDescriptor& base);
  /// Parses "zmod:M" or "poly:zmod:M".
  static RingDescriptor parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_poly() const noexcept { return kind_ == Kind::PolyOver; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  RingDescriptor base() const noexcept { return RingDescriptor(Kind::ZMod, modulus_); }

  /// Inverse of parse().
  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  RingDescriptor(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

/// An element of a ring described by a RingDescriptor, always held in canonical form:
/// coefficients reduced into [0, m), little-endian, trailing zeros stripped. For Z_m the
/// coefficient list has length 0 (the zero element) or 1.
class RingValue {
 public:
  /// The zero element.
  explicit RingValue(const RingDescriptor& ring) : ring_(ring) {}

  /// Image of an integer under Z -> ring.
  static RingValue from_int(const RingDescriptor& ring, std::int64_t value);
  /// Reduces and strips arbitrary coefficients. For Z_m only a single coefficient is allowed.
  static RingValue from_coefficients(const RingDescriptor& ring, std::vector<std::uint64_t> coeffs);
  /// The indeterminate t; ring must be a polynomial ring.
  static RingValue variable(const RingDescriptor& ring);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::span<const std::uint64_t> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^k (0 past the end).
  std::uint64_t coefficient(std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  std::string to_string() const;

  RingValue& operator+=(const RingValue& rhs);
  RingValue& operator-=(const RingValue& rhs);
  RingValue& operator*=(const RingValue& rhs);

  friend RingValue operator+(RingValue lhs, const RingValue& rhs) { return lhs += rhs; }
  friend RingValue operator-(RingValue lhs, const RingValue& rhs) { return lhs -= rhs; }
  friend RingValue operator*(const RingValue& lhs, const RingValue& rhs);
  friend RingValue operator-(const RingValue& v);

  friend bool operator==(const RingValue&, const RingValue&) = default;

 private:
  void canonicalize();

  RingDescriptor ring_;
  std::vector<std::uint64_t> coeffs_;
};

/// The unique h with 2h = a.
RingValue half(const RingValue& a);

/// A derivation of one of the supported rings: zero, d/dt, or f * d/dt.
/// On Z_m only the zero derivation exists.
class BaseDerivation {
 public:
  enum class Kind { Zero, FormalDerivative, ScaledFormalDerivative };

  static BaseDerivation zero(const RingDescriptor& ring);
  /// d/dt; throws DomainError on a ZMod ring.
  static BaseDerivation formal(const RingDescriptor& ring);
  /// f * d/dt; f's ring must be a polynomial ring.
  static BaseDerivation scaled(const RingValue& factor);
  /// Parses "zero", "d/dt" or "t*d/dt".
  static BaseDerivation parse(const RingDescriptor& ring, std::string_view text);

  Kind kind() const noexcept { return kind_; }
  const RingDescriptor& ring() const noexcept { return factor_.ring(); }
  const RingValue& factor() const noexcept { return factor_; }
  std::string to_string() const;

  RingValue operator()(const RingValue& p) const;

 private:
  BaseDerivation(Kind kind, RingValue factor) : kind_(kind), factor_(std::move(factor)) {}

  Kind kind_;
  RingValue factor_;
};

/// Formal derivative of a polynomial value.
RingValue formal_derivative(const RingValue& p);

}  // namespace derivring
