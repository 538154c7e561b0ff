#pragma once

// Dense n x n matrices over the rings of ring.hpp.
//
// Every function that takes matrix indices (i, j) uses the 1-based convention; storage
// is row-major and 0-based internally.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "derivring/ring.hpp"

namespace derivring {

class Matrix {
 public:
  /// The zero matrix.
  Matrix(const RingDescriptor& ring, std::size_t n);

  static Matrix identity(const RingDescriptor& ring, std::size_t n);
  /// z * I.
  static Matrix scalar(const RingValue& z, std::size_t n);
  /// Square matrix from rows of values; all values must belong to `ring`.
  static Matrix from_rows(const RingDescriptor& ring, const std::vector<std::vector<RingValue>>& rows);
  /// Square matrix from integer rows, reduced into `ring`.
  static Matrix from_ints(const RingDescriptor& ring,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }

  /// Entry a^{i,j}, 1-based.
  const RingValue& entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, RingValue value);

  /// Row-major entries.
  std::span<const RingValue> entries() const noexcept { return entries_; }

  bool is_zero() const;
  std::string to_string() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const RingValue& z, const Matrix& a);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  RingValue& at0(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const RingValue& at0(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  void check_index(std::size_t i, std::size_t j) const;

  RingDescriptor ring_;
  std::size_t n_;
  std::vector<RingValue> entries_;

  friend Matrix transpose(const Matrix&);
};

/// An element of H_n(R): a matrix equal to its transpose, checked on construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  operator const Matrix&() const noexcept { return m_; }
  std::size_t n() const noexcept { return m_.n(); }
  const RingDescriptor& ring() const noexcept { return m_.ring(); }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  Matrix m_;
};

/// e_{i,j}.
Matrix matrix_unit(const RingDescriptor& ring, std::size_t n, std::size_t i, std::size_t j);
/// ē_{i,j} = e_{i,j} + e_{j,i}, i != j.
SymmetricMatrix jordan_unit(const RingDescriptor& ring, std::size_t n, std::size_t i, std::size_t j);
/// The superdiagonal shift x₀ = Σ_{k<n} e_{k,k+1}; n >= 2.
Matrix probe_x0(const RingDescriptor& ring, std::size_t n);

/// [a, b] = ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);
/// a ∘ b = ½(ab + ba).
Matrix jordan_mul(const Matrix& a, const Matrix& b);
SymmetricMatrix jordan_mul(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// e_{i,i} a e_{j,j}: keeps only entry (i, j).
Matrix corner(const Matrix& a, std::size_t i, std::size_t j);

Matrix transpose(const Matrix& a);
bool is_symmetric(const Matrix& a);
bool is_skew(const Matrix& a);
bool has_zero_diagonal(const Matrix& a);

/// a^k, k >= 0.
Matrix power(const Matrix& a, unsigned k);

/// Places `a` in the top-left corner of a zero matrix of size `size` >= a.n().
Matrix embed(const Matrix& a, std::size_t size);
/// Top-left `size` x `size` block.
Matrix truncate(const Matrix& a, std::size_t size);

/// Throws DomainError unless a and b share ring and dimension.
void require_same_shape(const Matrix& a, const Matrix& b, const char* op);

}  // namespace derivring
