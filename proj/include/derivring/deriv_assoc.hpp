#pragma once

// Derivations of the associative ring M_n(R): inner derivations, a Leibniz checker,
// extension of a derivation of R to M_n(R), and derivations of a ring generated by two
// elements.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "derivring/matrix.hpp"

namespace derivring {

/// A map M_n(R) -> M_n(R), not necessarily additive.
using MatrixMap = std::function<Matrix(const Matrix&)>;

/// x -> ax - xa.
Matrix inner_apply(const Matrix& a, const Matrix& x);

/// The inner derivation generated by `a`.
class InnerDerivation {
 public:
  explicit InnerDerivation(Matrix generator) : generator_(std::move(generator)) {}

  const Matrix& generator() const noexcept { return generator_; }
  Matrix operator()(const Matrix& x) const { return inner_apply(generator_, x); }

 private:
  Matrix generator_;
};

struct LeibnizViolation {
  std::size_t sample;  ///< index into the sample list
  std::string kind;    ///< "leibniz" or "additivity"
  Matrix lhs;
  Matrix rhs;
};

struct LeibnizReport {
  std::size_t checked = 0;
  std::optional<LeibnizViolation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks D(x + y) = D(x) + D(y) and D(xy) = D(x)y + xD(y) on every sample pair,
/// stopping at the first violation.
LeibnizReport leibniz_check(const MatrixMap& d, std::span<const std::pair<Matrix, Matrix>> samples);

/// δ̄: applies δ to every entry.
MatrixMap entrywise(const BaseDerivation& delta, std::size_t n);

/// The 2x2 extension [[λ, μ], [ν, η]] -> [[δλ, δμ + μ], [δν - ν, δη]].
MatrixMap extend_m2(const BaseDerivation& delta);

/// Extension of δ to M_n(R) built by repeated 2x2 block doubling up to M_{2^k}(R),
/// k = ⌈log₂ n⌉, followed by compression a -> e D(a) e with e = Σ_{i<=n} e_{i,i}.
class ExtensionResult {
 public:
  ExtensionResult(BaseDerivation delta, std::size_t n);

  const BaseDerivation& delta() const noexcept { return delta_; }
  std::size_t n() const noexcept { return n_; }
  /// Doubling depth k with 2^k >= n.
  unsigned depth() const noexcept { return depth_; }
  std::size_t padded_size() const noexcept { return std::size_t{1} << depth_; }

  /// D̄(a) for a in M_n(R).
  Matrix operator()(const Matrix& a) const;
  /// The uncompressed tower derivation on M_{2^k}(R).
  Matrix apply_padded(const Matrix& a) const;
  /// The diagonal matrix e U e (n x n) with D̄ = δ̄ + [eUe, ·], accumulated from the
  /// diag(½, -½) block generators of every doubling step.
  Matrix inner_generator() const;

 private:
  Matrix apply_level(const Matrix& a, unsigned level) const;

  BaseDerivation delta_;
  std::size_t n_;
  unsigned depth_;
};

ExtensionResult extend_tower(const BaseDerivation& delta, std::size_t n);

struct WordFailure {
  std::string word;  ///< over the alphabet {x, y}
  std::string kind;  ///< "split-disagreement" or "not-inner"
  Matrix lhs;
  Matrix rhs;
};

struct WordCheckReport {
  std::size_t words = 0;
  std::size_t splits = 0;
  std::vector<WordFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Sets Δ(x) = [d, x], Δ(y) = [d, y] and propagates Δ to every word w in x, y of length
/// <= max_len through every split w = uv via Δ(uv) = Δ(u)v + uΔ(v). Reports words whose
/// splits disagree or whose value differs from [d, w].
WordCheckReport two_generator_check(const Matrix& x, const Matrix& y, const Matrix& d,
                                    std::size_t max_len);

}  // namespace derivring
