#include "derivring/deriv_assoc.hpp"

#include <map>

namespace derivring {
namespace {

// Block (row_block, col_block) of size h from a 2h x 2h matrix; blocks are 0-based.
Matrix block(const Matrix& a, std::size_t h, std::size_t row_block, std::size_t col_block) {
  Matrix out(a.ring(), h);
  for (std::size_t i = 1; i <= h; ++i) {
    for (std::size_t j = 1; j <= h; ++j) {
      out.set(i, j, a.entry(row_block * h + i, col_block * h + j));
    }
  }
  return out;
}

Matrix assemble(const Matrix& b11, const Matrix& b12, const Matrix& b21, const Matrix& b22) {
  const std::size_t h = b11.n();
  Matrix out(b11.ring(), 2 * h);
  for (std::size_t i = 1; i <= h; ++i) {
    for (std::size_t j = 1; j <= h; ++j) {
      out.set(i, j, b11.entry(i, j));
      out.set(i, h + j, b12.entry(i, j));
      out.set(h + i, j, b21.entry(i, j));
      out.set(h + i, h + j, b22.entry(i, j));
    }
  }
  return out;
}

unsigned ceil_log2(std::size_t n) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

Matrix inner_apply(const Matrix& a, const Matrix& x) {
  require_same_shape(a, x, "inner derivation");
  return commutator(a, x);
}

LeibnizReport leibniz_check(const MatrixMap& d, std::span<const std::pair<Matrix, Matrix>> samples) {
  LeibnizReport report;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [x, y] = samples[k];
    const Matrix dx = d(x);
    const Matrix dy = d(y);
    ++report.checked;

    Matrix sum_lhs = d(x + y);
    Matrix sum_rhs = dx + dy;
    if (!(sum_lhs == sum_rhs)) {
      report.violation = LeibnizViolation{k, "additivity", std::move(sum_lhs), std::move(sum_rhs)};
      return report;
    }
    Matrix lhs = d(x * y);
    Matrix rhs = dx * y + x * dy;
    if (!(lhs == rhs)) {
      report.violation = LeibnizViolation{k, "leibniz", std::move(lhs), std::move(rhs)};
      return report;
    }
  }
  return report;
}

MatrixMap entrywise(const BaseDerivation& delta, std::size_t n) {
  return [delta, n](const Matrix& a) {
    if (a.n() != n) throw DomainError("entrywise derivation applied to a matrix of the wrong size");
    Matrix out(a.ring(), n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) out.set(i, j, delta(a.entry(i, j)));
    }
    return out;
  };
}

MatrixMap extend_m2(const BaseDerivation& delta) {
  return [delta](const Matrix& a) {
    if (a.n() != 2) throw DomainError("extend_m2 acts on 2x2 matrices only");
    const RingValue& lambda = a.entry(1, 1);
    const RingValue& mu = a.entry(1, 2);
    const RingValue& nu = a.entry(2, 1);
    const RingValue& eta = a.entry(2, 2);
    return Matrix::from_rows(a.ring(), {{delta(lambda), delta(mu) + mu},
                                        {delta(nu) - nu, delta(eta)}});
  };
}

ExtensionResult::ExtensionResult(BaseDerivation delta, std::size_t n)
    : delta_(std::move(delta)), n_(n), depth_(ceil_log2(n)) {
  if (n < 2) throw DomainError("extension target needs n > 1");
}

Matrix ExtensionResult::apply_level(const Matrix& a, unsigned level) const {
  if (level == 0) {
    Matrix out(a.ring(), 1);
    out.set(1, 1, delta_(a.entry(1, 1)));
    return out;
  }
  // The 2x2 formula with entries replaced by blocks and δ by the previous level.
  const std::size_t h = a.n() / 2;
  const Matrix b12 = block(a, h, 0, 1);
  const Matrix b21 = block(a, h, 1, 0);
  return assemble(apply_level(block(a, h, 0, 0), level - 1),
                  apply_level(b12, level - 1) + b12,
                  apply_level(b21, level - 1) - b21,
                  apply_level(block(a, h, 1, 1), level - 1));
}

Matrix ExtensionResult::apply_padded(const Matrix& a) const {
  if (a.n() != padded_size()) {
    throw DomainError("apply_padded expects a " + std::to_string(padded_size()) + "x" +
                      std::to_string(padded_size()) + " matrix");
  }
  if (!(a.ring() == delta_.ring())) throw DomainError("matrix ring differs from the derivation's ring");
  return apply_level(a, depth_);
}

Matrix ExtensionResult::operator()(const Matrix& a) const {
  if (a.n() != n_) {
    throw DomainError("extension built for n = " + std::to_string(n_) + ", got n = " +
                      std::to_string(a.n()));
  }
  // e D(a) e with e the identity on the first n coordinates: keep the top-left block.
  return truncate(apply_padded(embed(a, padded_size())), n_);
}

Matrix ExtensionResult::inner_generator() const {
  const RingDescriptor& ring = delta_.ring();
  const RingValue plus_half = half(RingValue::from_int(ring, 1));
  const RingValue minus_half = -plus_half;
  // U_0 = 0, U_j = diag(U_{j-1}, U_{j-1}) + diag(½I, -½I).
  std::vector<RingValue> diag(1, RingValue(ring));
  for (unsigned level = 1; level <= depth_; ++level) {
    const std::size_t h = diag.size();
    std::vector<RingValue> next(2 * h, RingValue(ring));
    for (std::size_t k = 0; k < h; ++k) {
      next[k] = diag[k] + plus_half;
      next[h + k] = diag[k] + minus_half;
    }
    diag = std::move(next);
  }
  Matrix out(ring, n_);
  for (std::size_t k = 1; k <= n_; ++k) out.set(k, k, diag[k - 1]);
  return out;
}

ExtensionResult extend_tower(const BaseDerivation& delta, std::size_t n) {
  return ExtensionResult(delta, n);
}

WordCheckReport two_generator_check(const Matrix& x, const Matrix& y, const Matrix& d,
                                    std::size_t max_len) {
  require_same_shape(x, y, "two_generator_check");
  require_same_shape(x, d, "two_generator_check");
  if (max_len < 1) throw DomainError("max_len must be at least 1");

  WordCheckReport report;
  std::map<std::string, Matrix> delta;   // Δ(w), propagated
  std::map<std::string, Matrix> values;  // w as a matrix
  values.emplace("x", x);
  values.emplace("y", y);
  delta.emplace("x", commutator(d, x));
  delta.emplace("y", commutator(d, y));
  report.words = 2;

  std::vector<std::string> frontier{"x", "y"};
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& prefix : frontier) {
      for (char c : {'x', 'y'}) {
        std::string w = prefix + c;
        const Matrix w_value = values.at(prefix) * (c == 'x' ? x : y);

        std::optional<Matrix> propagated;
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
          const std::string u = w.substr(0, cut);
          const std::string v = w.substr(cut);
          Matrix candidate = delta.at(u) * values.at(v) + values.at(u) * delta.at(v);
          ++report.splits;
          if (!propagated) {
            propagated = std::move(candidate);
          } else if (!(candidate == *propagated)) {
            report.failures.push_back(
                {w + " split at " + std::to_string(cut), "split-disagreement", candidate, *propagated});
          }
        }
        Matrix expected = commutator(d, w_value);
        if (!(*propagated == expected)) {
          report.failures.push_back({w, "not-inner", *propagated, expected});
        }
        ++report.words;
        values.emplace(w, w_value);
        delta.emplace(w, std::move(*propagated));
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return report;
}

}  // namespace derivring
