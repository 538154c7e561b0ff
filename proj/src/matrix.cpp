#include "derivring/matrix.hpp"

#include <sstream>

namespace derivring {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.ring() == b.ring())) {
    throw DomainError(std::string("ring mismatch in ") + op + ": " + a.ring().to_string() +
                      " vs " + b.ring().to_string());
  }
  if (a.n() != b.n()) {
    throw DomainError(std::string("shape mismatch in ") + op + ": " + std::to_string(a.n()) +
                      "x" + std::to_string(a.n()) + " vs " + std::to_string(b.n()) + "x" +
                      std::to_string(b.n()));
  }
}

Matrix::Matrix(const RingDescriptor& ring, std::size_t n)
    : ring_(ring), n_(n), entries_(n * n, RingValue(ring)) {
  if (n == 0) throw DomainError("matrix dimension must be at least 1");
}

Matrix Matrix::identity(const RingDescriptor& ring, std::size_t n) {
  return scalar(RingValue::from_int(ring, 1), n);
}

Matrix Matrix::scalar(const RingValue& z, std::size_t n) {
  Matrix m(z.ring(), n);
  for (std::size_t k = 0; k < n; ++k) m.at0(k, k) = z;
  return m;
}

Matrix Matrix::from_rows(const RingDescriptor& ring,
                         const std::vector<std::vector<RingValue>>& rows) {
  Matrix m(ring, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw DomainError("row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (!(rows[r][c].ring() == ring)) throw DomainError("matrix entry from a different ring");
      m.at0(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const RingDescriptor& ring,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<RingValue>> values;
  for (const auto& row : rows) {
    auto& out = values.emplace_back();
    for (auto v : row) out.push_back(RingValue::from_int(ring, v));
  }
  return from_rows(ring, values);
}

void Matrix::check_index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw DomainError("index (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range for n = " + std::to_string(n_));
  }
}

const RingValue& Matrix::entry(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return at0(i - 1, j - 1);
}

void Matrix::set(std::size_t i, std::size_t j, RingValue value) {
  check_index(i, j);
  if (!(value.ring() == ring_)) throw DomainError("matrix entry from a different ring");
  at0(i - 1, j - 1) = std::move(value);
}

bool Matrix::is_zero() const {
  for (const auto& v : entries_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < n_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < n_; ++c) out << (c ? ", " : "") << at0(r, c).to_string();
    out << ']';
  }
  out << ']';
  return out.str();
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "matrix add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_shape(*this, rhs, "matrix subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

Matrix operator-(const Matrix& a) {
  Matrix out(a.ring_, a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = -a.entries_[k];
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_shape(lhs, rhs, "matrix multiply");
  const std::size_t n = lhs.n_;
  Matrix out(lhs.ring_, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const RingValue& a = lhs.at0(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const RingValue& b = rhs.at0(k, c);
        if (!b.is_zero()) out.at0(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix operator*(const RingValue& z, const Matrix& a) {
  if (!(z.ring() == a.ring_)) throw DomainError("scalar from a different ring");
  Matrix out(a.ring_, a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = z * a.entries_[k];
  return out;
}

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m)) {
  if (!is_symmetric(m_)) throw DomainError("matrix is not symmetric: " + m_.to_string());
}

Matrix matrix_unit(const RingDescriptor& ring, std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(ring, n);
  m.set(i, j, RingValue::from_int(ring, 1));
  return m;
}

SymmetricMatrix jordan_unit(const RingDescriptor& ring, std::size_t n, std::size_t i,
                            std::size_t j) {
  if (i == j) {
    throw DomainError("jordan_unit needs distinct indices; use matrix_unit for e_{i,i}");
  }
  return SymmetricMatrix(matrix_unit(ring, n, i, j) + matrix_unit(ring, n, j, i));
}

Matrix probe_x0(const RingDescriptor& ring, std::size_t n) {
  if (n < 2) throw DomainError("x0 requires n > 1");
  Matrix m(ring, n);
  const RingValue one = RingValue::from_int(ring, 1);
  for (std::size_t k = 1; k < n; ++k) m.set(k, k + 1, one);
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix jordan_mul(const Matrix& a, const Matrix& b) {
  const Matrix sum = a * b + b * a;
  const RingValue one_half = half(RingValue::from_int(a.ring(), 1));
  return one_half * sum;
}

SymmetricMatrix jordan_mul(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  return SymmetricMatrix(jordan_mul(a.matrix(), b.matrix()));
}

Matrix corner(const Matrix& a, std::size_t i, std::size_t j) {
  Matrix out(a.ring(), a.n());
  out.set(i, j, a.entry(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.ring_, a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    for (std::size_t c = 0; c < a.n_; ++c) out.at0(c, r) = a.at0(r, c);
  }
  return out;
}

bool is_symmetric(const Matrix& a) {
  for (std::size_t i = 1; i <= a.n(); ++i) {
    for (std::size_t j = i + 1; j <= a.n(); ++j) {
      if (!(a.entry(i, j) == a.entry(j, i))) return false;
    }
  }
  return true;
}

bool is_skew(const Matrix& a) {
  for (std::size_t i = 1; i <= a.n(); ++i) {
    for (std::size_t j = i; j <= a.n(); ++j) {
      if (!(a.entry(i, j) == -a.entry(j, i))) return false;
    }
  }
  return true;
}

bool has_zero_diagonal(const Matrix& a) {
  for (std::size_t i = 1; i <= a.n(); ++i) {
    if (!a.entry(i, i).is_zero()) return false;
  }
  return true;
}

Matrix power(const Matrix& a, unsigned k) {
  Matrix result = Matrix::identity(a.ring(), a.n());
  for (unsigned step = 0; step < k; ++step) result = result * a;
  return result;
}

Matrix embed(const Matrix& a, std::size_t size) {
  if (size < a.n()) throw DomainError("cannot embed into a smaller matrix");
  Matrix out(a.ring(), size);
  for (std::size_t i = 1; i <= a.n(); ++i) {
    for (std::size_t j = 1; j <= a.n(); ++j) out.set(i, j, a.entry(i, j));
  }
  return out;
}

Matrix truncate(const Matrix& a, std::size_t size) {
  if (size > a.n() || size == 0) throw DomainError("truncation size out of range");
  Matrix out(a.ring(), size);
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j = 1; j <= size; ++j) out.set(i, j, a.entry(i, j));
  }
  return out;
}

}  // namespace derivring
