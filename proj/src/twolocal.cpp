#include "derivring/twolocal.hpp"

#include "derivring/random.hpp"

namespace derivring {
namespace {

std::string unit_name(const char* prefix, std::size_t i, std::size_t j) {
  return std::string(prefix) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void require_distinct(std::size_t a, std::size_t b, const char* what) {
  if (a == b) throw DomainError(std::string(what) + " requires distinct indices, got " + std::to_string(a) + " twice");
}

}  // namespace

Oracle inner_oracle(const Matrix& hidden) {
  return Oracle{hidden.ring(), hidden.n(), [hidden](const Matrix& x) { return inner_apply(hidden, x); }};
}

Oracle zero_oracle(const RingDescriptor& ring, std::size_t n) {
  return Oracle{ring, n, [ring, n](const Matrix& x) {
                  if (x.n() != n) throw DomainError("zero oracle applied to a matrix of the wrong size");
                  return Matrix(ring, n);
                }};
}

WitnessFamily::WitnessFamily(const RingDescriptor& ring, std::size_t n)
    : ring_(ring), n_(n), offdiag_(n * n) {
  if (n < 2) throw DomainError("2-local witness families need n > 1");
}

std::size_t WitnessFamily::slot(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw DomainError("witness index " + unit_name("a", i, j) + " out of range");
  }
  require_distinct(i, j, "off-diagonal witness");
  return (i - 1) * n_ + (j - 1);
}

void WitnessFamily::check_matrix(const Matrix& m) const {
  if (!(m.ring() == ring_) || m.n() != n_) {
    throw DomainError("witness has the wrong ring or dimension");
  }
}

void WitnessFamily::set_offdiag(std::size_t i, std::size_t j, Matrix witness) {
  check_matrix(witness);
  offdiag_[slot(i, j)] = std::move(witness);
  validated_ = false;
}

void WitnessFamily::set_c(Matrix c) {
  check_matrix(c);
  c_ = std::move(c);
  validated_ = false;
}

const Matrix& WitnessFamily::offdiag(std::size_t i, std::size_t j) const {
  const auto& w = offdiag_[slot(i, j)];
  if (!w) throw ContractError("witness " + unit_name("a", i, j) + " is missing");
  return *w;
}

const Matrix& WitnessFamily::c() const { return c_ ? *c_ : offdiag(1, 2); }

void WitnessFamily::validate(const Oracle& oracle) {
  if (!(oracle.ring == ring_) || oracle.n != n_) {
    throw ContractError("oracle and witness family disagree on ring or dimension");
  }
  const Matrix x0 = probe_x0(ring_, n_);
  const Matrix delta_x0 = oracle(x0);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) {
      if (i == j) continue;
      const Matrix& a = offdiag(i, j);
      const Matrix unit = matrix_unit(ring_, n_, i, j);
      if (!(oracle(unit) == commutator(a, unit))) {
        throw ContractError("witness " + unit_name("a", i, j) + " does not implement Delta at " +
                            unit_name("e", i, j));
      }
      if (!(delta_x0 == commutator(a, x0))) {
        throw ContractError("witness " + unit_name("a", i, j) + " does not implement Delta at x0");
      }
    }
  }
  if (!(delta_x0 == commutator(c(), x0))) throw ContractError("witness c does not implement Delta at x0");
  validated_ = true;
}

ReconstructionResult reconstruct_abar(const WitnessFamily& family) {
  if (!family.validated()) {
    throw ContractError("reconstruct_abar requires a witness family validated against its oracle");
  }
  const std::size_t n = family.n();
  ReconstructionResult result{Matrix(family.ring(), n), {}};
  result.parts.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      // Off-diagonal part (i, j) comes from the witness of the transposed probe e_{j,i}.
      Matrix part = i == j ? corner(family.c(), i, i) : corner(family.offdiag(j, i), i, j);
      result.abar += part;
      result.parts.push_back(std::move(part));
    }
  }
  return result;
}

TheoremReport verify_theorem1(const Oracle& oracle, const WitnessFamily& family,
                              std::span<const Matrix> samples) {
  if (samples.empty()) throw DomainError("verify_theorem1 needs at least one sample");
  WitnessFamily checked = family;
  checked.validate(oracle);
  TheoremReport report{reconstruct_abar(checked).abar, 0, std::nullopt};
  for (std::size_t k = 0; k < samples.size(); ++k) {
    Matrix lhs = oracle(samples[k]);
    Matrix rhs = inner_apply(report.abar, samples[k]);
    ++report.checked;
    if (!(lhs == rhs)) {
      report.failure = SampleFailure{"sample " + std::to_string(k), std::move(lhs), std::move(rhs)};
      break;
    }
  }
  return report;
}

bool check_cross_corner(const Matrix& a_ij, const Matrix& a_ik, std::size_t i, std::size_t j,
                        std::size_t k) {
  require_same_shape(a_ij, a_ik, "check_cross_corner");
  require_distinct(i, k, "check_cross_corner");
  const RingDescriptor& ring = a_ij.ring();
  const std::size_t n = a_ij.n();
  const Matrix ekk = matrix_unit(ring, n, k, k);
  const Matrix eij = matrix_unit(ring, n, i, j);
  return ekk * a_ij * eij == ekk * a_ik * eij;
}

bool check_cross_corner_mirrored(const Matrix& a_ij, const Matrix& a_kj, std::size_t i,
                                 std::size_t j, std::size_t k) {
  require_same_shape(a_ij, a_kj, "check_cross_corner_mirrored");
  require_distinct(j, k, "check_cross_corner_mirrored");
  const RingDescriptor& ring = a_ij.ring();
  const std::size_t n = a_ij.n();
  const Matrix ekk = matrix_unit(ring, n, k, k);
  const Matrix eij = matrix_unit(ring, n, i, j);
  return eij * a_ij * ekk == eij * a_kj * ekk;
}

Matrix offdiag_formula_rhs(const WitnessFamily& family, std::size_t i, std::size_t j) {
  require_distinct(i, j, "check_offdiag_formula");
  const ReconstructionResult rec = reconstruct_abar(family);
  const RingDescriptor& ring = family.ring();
  const std::size_t n = family.n();

  // Σ_{k≠l} a_{k,l}; the right-multiplied Σ_{k≠l} a_{l,k} runs over the same summands.
  Matrix offdiag_sum(ring, n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 1; l <= n; ++l) {
      if (k != l) offdiag_sum += rec.part(k, l);
    }
  }
  const Matrix eij = matrix_unit(ring, n, i, j);
  const Matrix& a = family.offdiag(i, j);
  return offdiag_sum * eij - eij * offdiag_sum + a.entry(i, i) * eij - a.entry(j, j) * eij;
}

bool check_offdiag_formula(const WitnessFamily& family, const Oracle& oracle, std::size_t i,
                           std::size_t j) {
  const Matrix rhs = offdiag_formula_rhs(family, i, j);
  return oracle(matrix_unit(family.ring(), family.n(), i, j)) == rhs;
}

bool check_diag_difference(const Matrix& b, const Matrix& c, const Oracle& oracle) {
  require_same_shape(b, c, "check_diag_difference");
  const Matrix x0 = probe_x0(b.ring(), b.n());
  const Matrix delta_x0 = oracle(x0);
  if (!(delta_x0 == commutator(b, x0))) throw ContractError("b does not witness Delta at x0");
  if (!(delta_x0 == commutator(c, x0))) throw ContractError("c does not witness Delta at x0");
  for (std::size_t k = 1; k <= b.n(); ++k) {
    for (std::size_t l = 1; l <= b.n(); ++l) {
      if (k == l) continue;
      if (!(c.entry(k, k) - c.entry(l, l) == b.entry(k, k) - b.entry(l, l))) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_noncentral_unit(const Matrix& difference) {
  for (std::size_t i = 1; i <= difference.n(); ++i) {
    for (std::size_t j = 1; j <= difference.n(); ++j) {
      if (!commutator(difference, matrix_unit(difference.ring(), difference.n(), i, j)).is_zero()) {
        return std::pair{i, j};
      }
    }
  }
  return std::nullopt;
}

NoiseSpec parse_noise(std::string_view text) {
  if (text == "none") return NoiseSpec::None;
  if (text == "central") return NoiseSpec::CentralShifts;
  if (text == "x0-commutant") return NoiseSpec::X0CommutantShiftOnC;
  throw DomainError("unknown noise '" + std::string(text) + "' (expected none, central or x0-commutant)");
}

std::string to_string(NoiseSpec noise) {
  switch (noise) {
    case NoiseSpec::None:
      return "none";
    case NoiseSpec::CentralShifts:
      return "central";
    case NoiseSpec::X0CommutantShiftOnC:
      return "x0-commutant";
  }
  return {};
}

TwoLocalInstance gen_witness_family(const Matrix& hidden, NoiseSpec noise, std::uint64_t seed,
                                    unsigned max_degree) {
  const RingDescriptor& ring = hidden.ring();
  const std::size_t n = hidden.n();
  Rng rng(seed);
  auto shifted = [&] {
    if (noise == NoiseSpec::None) return hidden;
    return hidden + Matrix::scalar(random_value(rng, ring, max_degree), n);
  };

  TwoLocalInstance instance{hidden, inner_oracle(hidden), WitnessFamily(ring, n)};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j) instance.family.set_offdiag(i, j, shifted());
    }
  }
  Matrix c = shifted();
  if (noise == NoiseSpec::X0CommutantShiftOnC) {
    // p(x₀) = Σ_k r_k x₀^k commutes with x₀.
    const Matrix x0 = probe_x0(ring, n);
    Matrix x0_power = Matrix::identity(ring, n);
    for (std::size_t k = 0; k < n; ++k) {
      c += random_value(rng, ring, max_degree) * x0_power;
      x0_power = x0_power * x0;
    }
  }
  instance.family.set_c(std::move(c));
  instance.family.validate(instance.oracle);
  return instance;
}

}  // namespace derivring
