#pragma once

// 2-local inner derivations of M_n(R): witness families, reconstruction of the implementing
// element ā, and executable forms of the lemmas that justify the reconstruction.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "derivring/deriv_assoc.hpp"

namespace derivring {

/// A (possibly non-additive) map Δ on n x n matrices, given as a black box.
struct Oracle {
  RingDescriptor ring;
  std::size_t n;
  MatrixMap evaluate;

  Matrix operator()(const Matrix& x) const { return evaluate(x); }
};

/// The oracle x -> [hidden, x].
Oracle inner_oracle(const Matrix& hidden);
/// The oracle x -> 0.
Oracle zero_oracle(const RingDescriptor& ring, std::size_t n);

/// Witnesses a(i,j) (i != j) with Δ(e_{i,j}) = [a(i,j), e_{i,j}] and Δ(x₀) = [a(i,j), x₀],
/// plus c with Δ(x₀) = [c, x₀]. When c is not supplied, a(1,2) stands in for it.
///
/// A family must pass validate() against its oracle before it can be reconstructed;
/// any later mutation drops the validated state.
class WitnessFamily {
 public:
  WitnessFamily(const RingDescriptor& ring, std::size_t n);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }

  void set_offdiag(std::size_t i, std::size_t j, Matrix witness);
  void set_c(Matrix c);

  /// a(i, j); throws ContractError when unset.
  const Matrix& offdiag(std::size_t i, std::size_t j) const;
  /// c, or a(1,2) when c was never set.
  const Matrix& c() const;
  bool has_explicit_c() const noexcept { return c_.has_value(); }

  /// Checks every defining identity against the oracle; throws ContractError naming the
  /// first probe that fails.
  void validate(const Oracle& oracle);
  bool validated() const noexcept { return validated_; }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;
  void check_matrix(const Matrix& m) const;

  RingDescriptor ring_;
  std::size_t n_;
  std::vector<std::optional<Matrix>> offdiag_;  // n*n slots, diagonal unused
  std::optional<Matrix> c_;
  bool validated_ = false;
};

/// ā together with its corner summands a_{i,j}.
struct ReconstructionResult {
  Matrix abar;
  std::vector<Matrix> parts;  ///< row-major n*n

  const Matrix& part(std::size_t i, std::size_t j) const { return parts[(i - 1) * abar.n() + (j - 1)]; }
};

/// a_{i,j} = e_{i,i} a(j,i) e_{j,j} for i != j, a_{i,i} = e_{i,i} c e_{i,i}, ā = Σ a_{i,j}.
ReconstructionResult reconstruct_abar(const WitnessFamily& family);

struct SampleFailure {
  std::string probe;
  Matrix lhs;
  Matrix rhs;
};

struct TheoremReport {
  Matrix abar;
  std::size_t checked = 0;
  std::optional<SampleFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Validates the family, reconstructs ā, and checks Δ(x) = āx - xā on every sample.
TheoremReport verify_theorem1(const Oracle& oracle, const WitnessFamily& family,
                              std::span<const Matrix> samples);

/// e_{k,k} a(i,j) e_{i,j} = e_{k,k} a(i,k) e_{i,j}; requires k != i.
bool check_cross_corner(const Matrix& a_ij, const Matrix& a_ik, std::size_t i, std::size_t j,
                        std::size_t k);
/// e_{i,j} a(i,j) e_{k,k} = e_{i,j} a(k,j) e_{k,k}; requires k != j.
bool check_cross_corner_mirrored(const Matrix& a_ij, const Matrix& a_kj, std::size_t i,
                                 std::size_t j, std::size_t k);

/// Right-hand side of the off-diagonal expansion below, computed from the reconstruction parts.
Matrix offdiag_formula_rhs(const WitnessFamily& family, std::size_t i, std::size_t j);

/// Δ(e_{i,j}) = S e_{i,j} - e_{i,j} S + a(i,j)^{i,i} e_{i,j} - e_{i,j} a(i,j)^{j,j}, with
/// S = Σ_{k != l} a_{k,l}. The family must be validated.
bool check_offdiag_formula(const WitnessFamily& family, const Oracle& oracle, std::size_t i,
                           std::size_t j);

/// b and c must both witness Δ(x₀) (ContractError otherwise); true iff
/// c^{k,k} - c^{l,l} = b^{k,k} - b^{l,l} for all k, l.
bool check_diag_difference(const Matrix& b, const Matrix& c, const Oracle& oracle);

/// First matrix unit e_{i,j} that does not commute with `difference`; nullopt when the
/// difference is central.
std::optional<std::pair<std::size_t, std::size_t>> first_noncentral_unit(const Matrix& difference);

enum class NoiseSpec { None, CentralShifts, X0CommutantShiftOnC };

NoiseSpec parse_noise(std::string_view text);
std::string to_string(NoiseSpec noise);

struct TwoLocalInstance {
  Matrix hidden;
  Oracle oracle;
  WitnessFamily family;
};

/// Oracle x -> [hidden, x] with a validated witness family. CentralShifts draws an independent
/// central zI per witness; X0CommutantShiftOnC does the same and further adds a random
/// polynomial in x₀ to c.
TwoLocalInstance gen_witness_family(const Matrix& hidden, NoiseSpec noise, std::uint64_t seed,
                                    unsigned max_degree = 3);

}  // namespace derivring
