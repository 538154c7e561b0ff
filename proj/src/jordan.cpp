#include "derivring/jordan.hpp"

#include <algorithm>

namespace derivring {
namespace {

Matrix diagonal_unit(const RingDescriptor& ring, std::size_t n, std::size_t i) {
  return matrix_unit(ring, n, i, i);
}

// e_{p,p} m e_{q,q} compared between two matrices.
bool same_corner(const Matrix& a, const Matrix& b, std::size_t p, std::size_t q) {
  return a.entry(p, q) == b.entry(p, q);
}

std::string idx(std::size_t i, std::size_t j) {
  return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

}  // namespace

JordanPairDerivation::JordanPairDerivation(const RingDescriptor& ring, std::size_t n,
                                           std::vector<Pair> pairs)
    : ring_(ring), n_(n) {
  for (auto& [a, b] : pairs) add(std::move(a), std::move(b));
}

void JordanPairDerivation::add(SymmetricMatrix a, SymmetricMatrix b) {
  if (!(a.ring() == ring_) || !(b.ring() == ring_) || a.n() != n_ || b.n() != n_) {
    throw DomainError("pair does not match the derivation's ring or dimension");
  }
  pairs_.emplace_back(std::move(a), std::move(b));
}

Matrix JordanPairDerivation::apply_full(const Matrix& x) const {
  if (!(x.ring() == ring_) || x.n() != n_) throw DomainError("argument has the wrong ring or dimension");
  Matrix out(ring_, n_);
  for (const auto& [a, b] : pairs_) {
    out += jordan_mul(a.matrix(), jordan_mul(b.matrix(), x));
    out -= jordan_mul(b.matrix(), jordan_mul(a.matrix(), x));
  }
  return out;
}

SymmetricMatrix jordan_inner_apply(const JordanPairDerivation& pd, const SymmetricMatrix& x) {
  return SymmetricMatrix(pd.apply_full(x.matrix()));
}

Matrix pairs_to_commutator(const JordanPairDerivation& pd) {
  Matrix sum(pd.ring(), pd.n());
  for (const auto& [a, b] : pd.pairs()) sum += commutator(a.matrix(), b.matrix());
  const RingValue quarter = half(half(RingValue::from_int(pd.ring(), 1)));
  return quarter * sum;
}

bool check_diag_zero(std::span<const std::pair<Matrix, Matrix>> pairs) {
  if (pairs.empty()) return true;
  Matrix sum(pairs.front().first.ring(), pairs.front().first.n());
  for (const auto& [a, b] : pairs) {
    if (!is_symmetric(a) || !is_symmetric(b)) throw DomainError("check_diag_zero needs symmetric pairs");
    sum += commutator(a, b);
  }
  return has_zero_diagonal(sum);
}

bool check_diag_zero(const JordanPairDerivation& pd) {
  std::vector<std::pair<Matrix, Matrix>> raw;
  raw.reserve(pd.pairs().size());
  for (const auto& [a, b] : pd.pairs()) raw.emplace_back(a.matrix(), b.matrix());
  return check_diag_zero(raw);
}

bool check_corner_consistency(const Matrix& d_ii, const Matrix& d_jj, std::size_t i, std::size_t j) {
  require_same_shape(d_ii, d_jj, "check_corner_consistency");
  if (i == j) throw DomainError("check_corner_consistency requires i != j");
  const std::size_t n = d_ii.n();
  d_ii.entry(i, j);  // range check

  // e_{i,i}d(ii)e_{i,i} = e_{j,j}d(ii)e_{j,j} and = e_{j,j}d(jj)e_{j,j}: as scalars.
  if (!(d_ii.entry(i, i) == d_ii.entry(j, j))) return false;
  if (!(d_ii.entry(i, i) == d_jj.entry(j, j))) return false;
  if (!same_corner(d_ii, d_jj, i, j) || !same_corner(d_ii, d_jj, j, i)) return false;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == i || k == j) continue;
    if (!same_corner(d_ii, d_jj, i, k) || !same_corner(d_ii, d_jj, k, j)) return false;
    if (!same_corner(d_ii, d_jj, j, k) || !same_corner(d_ii, d_jj, k, i)) return false;
  }
  return true;
}

MatrixMap corner_compress(const Oracle& oracle, std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("corner_compress requires i != j");
  if (i < 1 || j < 1 || i > oracle.n || j > oracle.n) throw DomainError("corner index out of range");
  const Matrix e = diagonal_unit(oracle.ring, oracle.n, i) + diagonal_unit(oracle.ring, oracle.n, j);
  return [oracle, e](const Matrix& x) {
    if (!(e * x * e == x)) throw DomainError("corner_compress argument is not supported on the corner");
    return e * oracle(x) * e;
  };
}

JordanWitnessFamily::JordanWitnessFamily(const RingDescriptor& ring, std::size_t n)
    : ring_(ring), n_(n), diag_(n) {
  if (n < 2) throw DomainError("Jordan witness families need n > 1");
}

void JordanWitnessFamily::set_diag(std::size_t i, Matrix d_ii) {
  if (i < 1 || i > n_) throw DomainError("witness index d(" + std::to_string(i) + ") out of range");
  if (!(d_ii.ring() == ring_) || d_ii.n() != n_) throw DomainError("witness has the wrong ring or dimension");
  diag_[i - 1] = std::move(d_ii);
  validated_ = false;
}

const Matrix& JordanWitnessFamily::diag(std::size_t i) const {
  if (i < 1 || i > n_) throw DomainError("witness index d(" + std::to_string(i) + ") out of range");
  if (!diag_[i - 1]) throw ContractError("witness d(" + std::to_string(i) + ") is missing");
  return *diag_[i - 1];
}

void JordanWitnessFamily::validate(const Oracle& oracle) {
  if (!(oracle.ring == ring_) || oracle.n != n_) {
    throw ContractError("oracle and witness family disagree on ring or dimension");
  }
  for (std::size_t i = 1; i <= n_; ++i) {
    const Matrix& d = diag(i);
    const std::string name = "d(" + std::to_string(i) + std::to_string(i) + ")";
    if (!is_skew(d) || !has_zero_diagonal(d)) {
      throw ContractError(name + " is not skew-symmetric with zero diagonal");
    }
    const Matrix eii = diagonal_unit(ring_, n_, i);
    if (!(oracle(eii) == commutator(d, eii))) {
      throw ContractError(name + " does not implement Delta at e" + idx(i, i));
    }
  }
  validated_ = true;
}

ReconstructionResult reconstruct_abar_jordan(const JordanWitnessFamily& family) {
  if (!family.validated()) {
    throw ContractError("reconstruct_abar_jordan requires a witness family validated against its oracle");
  }
  const std::size_t n = family.n();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Matrix& di = family.diag(i);
      const Matrix& dj = family.diag(j);
      if (!same_corner(di, dj, i, j) || !same_corner(di, dj, j, i)) {
        throw ContractError("witnesses d(" + std::to_string(i) + std::to_string(i) + ") and d(" +
                            std::to_string(j) + std::to_string(j) + ") disagree on corner " + idx(i, j));
      }
    }
  }

  ReconstructionResult result{Matrix(family.ring(), n), {}};
  result.parts.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      Matrix part = corner(family.diag(i), i, j);
      if (i == j && !part.is_zero()) {
        throw ContractError("diagonal corner a" + idx(i, i) + " of d(" + std::to_string(i) +
                            std::to_string(i) + ") is nonzero");
      }
      result.abar += part;
      result.parts.push_back(std::move(part));
    }
  }
  return result;
}

bool check_ebar_probes(const Oracle& oracle, const Matrix& abar) {
  for (std::size_t i = 1; i <= abar.n(); ++i) {
    for (std::size_t j = i + 1; j <= abar.n(); ++j) {
      const Matrix ebar = jordan_unit(abar.ring(), abar.n(), i, j).matrix();
      if (!(oracle(ebar) == commutator(abar, ebar))) return false;
    }
  }
  return true;
}

JordanTheoremReport verify_jordan_theorem(const Oracle& oracle, const JordanWitnessFamily& family,
                                          std::span<const SymmetricMatrix> samples) {
  if (samples.empty()) throw DomainError("verify_jordan_theorem needs at least one sample");
  JordanWitnessFamily checked = family;
  checked.validate(oracle);
  JordanTheoremReport report{reconstruct_abar_jordan(checked).abar, 0, 0, std::nullopt};
  const Matrix& abar = report.abar;

  if (!is_skew(abar)) {
    report.failure = SampleFailure{"abar skew", abar, -transpose(abar)};
    return report;
  }
  for (std::size_t i = 1; i <= abar.n(); ++i) {
    for (std::size_t j = i + 1; j <= abar.n(); ++j) {
      const Matrix ebar = jordan_unit(abar.ring(), abar.n(), i, j).matrix();
      Matrix lhs = oracle(ebar);
      Matrix rhs = commutator(abar, ebar);
      if (!(lhs == rhs)) {
        report.failure = SampleFailure{"ebar" + idx(i, j), std::move(lhs), std::move(rhs)};
        return report;
      }
    }
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Matrix& x = samples[k].matrix();
    Matrix lhs = oracle(x);
    Matrix rhs = commutator(abar, x);
    ++report.checked;
    if (!(lhs == rhs)) {
      report.failure = SampleFailure{"sample " + std::to_string(k), std::move(lhs), std::move(rhs)};
      return report;
    }
    if (!is_symmetric(lhs)) {
      report.failure = SampleFailure{"sample " + std::to_string(k) + " symmetric", lhs, transpose(lhs)};
      return report;
    }
  }
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Matrix& x = samples[k].matrix();
    const Matrix& y = samples[(k + 1) % samples.size()].matrix();
    Matrix lhs = commutator(abar, jordan_mul(x, y));
    Matrix rhs = jordan_mul(commutator(abar, x), y) + jordan_mul(x, commutator(abar, y));
    ++report.leibniz_pairs;
    if (!(lhs == rhs)) {
      report.failure = SampleFailure{"jordan leibniz " + std::to_string(k), std::move(lhs), std::move(rhs)};
      return report;
    }
  }
  return report;
}

JordanPairDerivation random_pair_derivation(Rng& rng, const RingDescriptor& ring, std::size_t n,
                                            std::size_t pairs, unsigned max_degree) {
  JordanPairDerivation pd(ring, n);
  for (std::size_t k = 0; k < pairs; ++k) {
    SymmetricMatrix a = random_symmetric(rng, ring, n, max_degree);
    SymmetricMatrix b = random_symmetric(rng, ring, n, max_degree);
    pd.add(std::move(a), std::move(b));
  }
  return pd;
}

namespace {

JordanPairDerivation reexpress(const JordanPairDerivation& hidden, Rng& rng, unsigned max_degree) {
  const RingDescriptor& ring = hidden.ring();
  const std::size_t n = hidden.n();
  const RingValue two = RingValue::from_int(ring, 2);
  std::vector<JordanPairDerivation::Pair> out;
  for (const auto& [a, b] : hidden.pairs()) {
    switch (rng.below(4)) {
      case 0: {  // D_{a,b} = D_{a,b'} + D_{a,b-b'}
        SymmetricMatrix part = random_symmetric(rng, ring, n, max_degree);
        SymmetricMatrix rest(b.matrix() - part.matrix());
        out.emplace_back(a, std::move(part));
        out.emplace_back(a, std::move(rest));
        break;
      }
      case 1:  // D_{a,b} = D_{b,-a}
        out.emplace_back(b, SymmetricMatrix(-a.matrix()));
        break;
      case 2:  // D_{a,b} = D_{2a,½b}
        out.emplace_back(SymmetricMatrix(two * a.matrix()), SymmetricMatrix(half(RingValue::from_int(ring, 1)) * b.matrix()));
        break;
      default:
        out.emplace_back(a, b);
        break;
    }
  }
  const std::size_t padding = rng.below(3);
  for (std::size_t k = 0; k < padding; ++k) {
    SymmetricMatrix r = random_symmetric(rng, ring, n, max_degree);
    out.emplace_back(r, r);
  }
  // Fisher-Yates with the pinned bounded sampler.
  for (std::size_t k = out.size(); k > 1; --k) std::swap(out[k - 1], out[rng.below(k)]);
  return JordanPairDerivation(ring, n, std::move(out));
}

}  // namespace

JordanInstance gen_jordan_instance(const JordanPairDerivation& hidden, std::uint64_t seed,
                                   bool rerandomize, unsigned max_degree) {
  const std::size_t n = hidden.n();
  Rng rng(seed);
  Oracle oracle{hidden.ring(), n, [hidden](const Matrix& x) {
                  if (!is_symmetric(x)) throw DomainError("Jordan oracle evaluated outside H_n(R)");
                  return hidden.apply_full(x);
                }};
  JordanInstance instance{hidden, oracle, JordanWitnessFamily(hidden.ring(), n), {}};
  for (std::size_t i = 1; i <= n; ++i) {
    JordanPairDerivation rep = rerandomize ? reexpress(hidden, rng, max_degree) : hidden;
    instance.family.set_diag(i, pairs_to_commutator(rep));
    instance.representations.push_back(std::move(rep));
  }
  instance.family.validate(instance.oracle);
  return instance;
}

}  // namespace derivring
