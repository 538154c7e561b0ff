#pragma once

// Jordan inner derivations of H_n(R) and the reconstruction of a 2-local inner derivation
// of H_n(R) as x -> [ā, x].

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "derivring/random.hpp"
#include "derivring/twolocal.hpp"

namespace derivring {

/// Σ_k D_{a_k,b_k} with D_{a,b}(x) = a∘(b∘x) - b∘(a∘x), a_k and b_k symmetric.
class JordanPairDerivation {
 public:
  using Pair = std::pair<SymmetricMatrix, SymmetricMatrix>;

  JordanPairDerivation(const RingDescriptor& ring, std::size_t n, std::vector<Pair> pairs = {});

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }
  std::span<const Pair> pairs() const noexcept { return pairs_; }
  void add(SymmetricMatrix a, SymmetricMatrix b);

  /// The same formula evaluated on an arbitrary (not necessarily symmetric) matrix.
  Matrix apply_full(const Matrix& x) const;

 private:
  RingDescriptor ring_;
  std::size_t n_;
  std::vector<Pair> pairs_;
};

SymmetricMatrix jordan_inner_apply(const JordanPairDerivation& pd, const SymmetricMatrix& x);

/// s = ¼ Σ [a_k, b_k]; x -> [s, x] agrees with the pair list on all of M_n(R).
Matrix pairs_to_commutator(const JordanPairDerivation& pd);

/// True iff Σ [a_k, b_k] has zero diagonal. Throws DomainError on a non-symmetric entry.
bool check_diag_zero(std::span<const std::pair<Matrix, Matrix>> pairs);
bool check_diag_zero(const JordanPairDerivation& pd);

/// All corner equalities between witnesses d(ii), d(jj) of Δ at e_{i,i}, e_{j,j}:
/// diagonal entries of both equal, the (i,j) and (j,i) corners agree, and for every
/// k != i, j the corners (i,k), (k,j), (j,k), (k,i) agree.
bool check_corner_consistency(const Matrix& d_ii, const Matrix& d_jj, std::size_t i, std::size_t j);

/// x -> e Δ(x) e on e H_n(R) e, e = e_{i,i} + e_{j,j}. Inputs outside the corner are rejected.
MatrixMap corner_compress(const Oracle& oracle, std::size_t i, std::size_t j);

/// Witnesses d(ii) with Δ(e_{i,i}) = [d(ii), e_{i,i}], each stored in reduced commutator form
/// ¼ Σ [a_k, b_k] (hence skew with zero diagonal).
class JordanWitnessFamily {
 public:
  JordanWitnessFamily(const RingDescriptor& ring, std::size_t n);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }

  void set_diag(std::size_t i, Matrix d_ii);
  const Matrix& diag(std::size_t i) const;

  void validate(const Oracle& oracle);
  bool validated() const noexcept { return validated_; }

 private:
  RingDescriptor ring_;
  std::size_t n_;
  std::vector<std::optional<Matrix>> diag_;
  bool validated_ = false;
};

/// a_{i,i} = e_{i,i} d(ii) e_{i,i} (required to be zero), a_{i,j} = e_{i,i} d(ii) e_{j,j},
/// ā = Σ a_{i,j}. Throws ContractError if the family is unvalidated, a diagonal corner is
/// nonzero, or two witnesses disagree on a shared (i,j)/(j,i) corner.
ReconstructionResult reconstruct_abar_jordan(const JordanWitnessFamily& family);

struct JordanTheoremReport {
  Matrix abar;
  std::size_t checked = 0;        ///< samples compared against the oracle
  std::size_t leibniz_pairs = 0;  ///< Jordan Leibniz pairs checked
  std::optional<SampleFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Validates and reconstructs, then checks ā skew, Δ(x) = [ā, x] with a symmetric result for
/// every sample, Δ(ē_{i,j}) = [ā, ē_{i,j}] for all i != j, and the Jordan Leibniz rule for
/// x -> [ā, x] on consecutive sample pairs (s_k, s_{k+1 mod m}).
JordanTheoremReport verify_jordan_theorem(const Oracle& oracle, const JordanWitnessFamily& family,
                                          std::span<const SymmetricMatrix> samples);

/// Δ(ē_{i,j}) = āē_{i,j} - ē_{i,j}ā for every i != j.
bool check_ebar_probes(const Oracle& oracle, const Matrix& abar);

struct JordanInstance {
  JordanPairDerivation hidden;
  Oracle oracle;
  JordanWitnessFamily family;
  /// Pair list used for each probe e_{i,i} (index i-1).
  std::vector<JordanPairDerivation> representations;
};

/// Oracle x -> jordan_inner_apply(hidden, x). Each d(ii) is the reduced form of its own
/// re-expression of `hidden`: pairs split along b = b' + (b - b'), swapped as (b, -a),
/// rescaled as (2a, ½b), padded with canceling (r, r) pairs and shuffled.
JordanInstance gen_jordan_instance(const JordanPairDerivation& hidden, std::uint64_t seed,
                                   bool rerandomize = true, unsigned max_degree = 3);

/// A random pair list with `pairs` entries.
JordanPairDerivation random_pair_derivation(Rng& rng, const RingDescriptor& ring, std::size_t n,
                                            std::size_t pairs, unsigned max_degree);

}  // namespace derivring
