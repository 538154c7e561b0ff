#include "derivring/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "derivring/random.hpp"

namespace derivring {
namespace {

struct Outcome {
  std::size_t checked = 0;
  std::vector<Failure> failures;
};

// Collects results for one instance.
class InstanceContext {
 public:
  InstanceContext(std::size_t index, std::uint64_t seed) : index_(index), seed_(seed), rng_(seed) {}

  Rng& rng() { return rng_; }
  std::uint64_t seed() const { return seed_; }
  /// Seed for a helper that owns its own Rng.
  std::uint64_t sub_seed(std::uint64_t k) const { return derive_seed(seed_, k); }

  void count(std::size_t k = 1) { outcome_.checked += k; }
  void fail(std::string probe, const Matrix& lhs, const Matrix& rhs) {
    outcome_.failures.push_back({index_, seed_, std::move(probe), matrix_to_json(lhs), matrix_to_json(rhs)});
  }
  void fail(std::string probe, std::string detail) {
    outcome_.failures.push_back({index_, seed_, std::move(probe), std::move(detail), nullptr});
  }
  Outcome take() { return std::move(outcome_); }

 private:
  std::size_t index_;
  std::uint64_t seed_;
  Rng rng_;
  Outcome outcome_;
};

std::string unit(const char* name, std::size_t i, std::size_t j) {
  return std::string(name) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

BaseDerivation config_delta(const CampaignConfig& config) {
  const std::string text = config.delta.value_or(config.ring.is_poly() ? "d/dt" : "zero");
  return BaseDerivation::parse(config.ring, text);
}

std::vector<Matrix> random_samples(InstanceContext& ctx, const CampaignConfig& config) {
  std::vector<Matrix> samples;
  samples.reserve(config.samples);
  for (std::size_t k = 0; k < config.samples; ++k) {
    samples.push_back(random_matrix(ctx.rng(), config.ring, config.n, config.max_degree));
  }
  return samples;
}

TwoLocalInstance random_twolocal(InstanceContext& ctx, const CampaignConfig& config) {
  Matrix hidden = random_matrix(ctx.rng(), config.ring, config.n, config.max_degree);
  return gen_witness_family(hidden, config.noise, ctx.sub_seed(1), config.max_degree);
}

void run_theorem1(InstanceContext& ctx, const CampaignConfig& config) {
  const TwoLocalInstance inst = random_twolocal(ctx, config);
  if (config.samples == 0) return;
  const std::vector<Matrix> samples = random_samples(ctx, config);
  const TheoremReport report = verify_theorem1(inst.oracle, inst.family, samples);
  ctx.count(report.checked);
  if (report.failure) ctx.fail(report.failure->probe, report.failure->lhs, report.failure->rhs);

  // ā may differ from the hidden generator only by a central element.
  const Matrix difference = report.abar - inst.hidden;
  ctx.count();
  if (auto u = first_noncentral_unit(difference)) {
    const Matrix e = matrix_unit(config.ring, config.n, u->first, u->second);
    ctx.fail("center " + unit("e", u->first, u->second), commutator(difference, e), Matrix(config.ring, config.n));
  }
}

void run_lemma_cross(InstanceContext& ctx, const CampaignConfig& config) {
  const TwoLocalInstance inst = random_twolocal(ctx, config);
  const WitnessFamily& wf = inst.family;
  const std::size_t n = config.n;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) {
        if (j != i && k != i) {
          ctx.count();
          if (!check_cross_corner(wf.offdiag(i, j), wf.offdiag(i, k), i, j, k)) {
            const Matrix ekk = matrix_unit(config.ring, n, k, k);
            const Matrix eij = matrix_unit(config.ring, n, i, j);
            ctx.fail("cross i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k),
                     ekk * wf.offdiag(i, j) * eij, ekk * wf.offdiag(i, k) * eij);
          }
        }
        if (i != j && k != j) {
          ctx.count();
          if (!check_cross_corner_mirrored(wf.offdiag(i, j), wf.offdiag(k, j), i, j, k)) {
            const Matrix ekk = matrix_unit(config.ring, n, k, k);
            const Matrix eij = matrix_unit(config.ring, n, i, j);
            ctx.fail("mirrored i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k),
                     eij * wf.offdiag(i, j) * ekk, eij * wf.offdiag(k, j) * ekk);
          }
        }
      }
    }
  }
}

void run_lemma_offdiag(InstanceContext& ctx, const CampaignConfig& config) {
  const TwoLocalInstance inst = random_twolocal(ctx, config);
  for (std::size_t i = 1; i <= config.n; ++i) {
    for (std::size_t j = 1; j <= config.n; ++j) {
      if (i == j) continue;
      ctx.count();
      if (!check_offdiag_formula(inst.family, inst.oracle, i, j)) {
        ctx.fail("offdiag " + unit("e", i, j), inst.oracle(matrix_unit(config.ring, config.n, i, j)),
                 offdiag_formula_rhs(inst.family, i, j));
      }
    }
  }
}

void run_lemma_diagdiff(InstanceContext& ctx, const CampaignConfig& config) {
  const TwoLocalInstance inst = random_twolocal(ctx, config);
  const Matrix& c = inst.family.c();
  std::vector<std::pair<std::string, Matrix>> others;
  for (std::size_t i = 1; i <= config.n; ++i) {
    for (std::size_t j = 1; j <= config.n; ++j) {
      if (i != j) others.emplace_back("b=" + unit("a", i, j), inst.family.offdiag(i, j));
    }
  }
  // An extra x0 witness shifted by an independent polynomial in x0.
  const Matrix x0 = probe_x0(config.ring, config.n);
  Matrix b = inst.hidden;
  Matrix x0_power = Matrix::identity(config.ring, config.n);
  for (std::size_t k = 0; k < config.n; ++k) {
    b += random_value(ctx.rng(), config.ring, config.max_degree) * x0_power;
    x0_power = x0_power * x0;
  }
  others.emplace_back("b=hidden+p(x0)", std::move(b));

  for (const auto& [name, candidate] : others) {
    ctx.count();
    if (!check_diag_difference(candidate, c, inst.oracle)) ctx.fail("diagdiff " + name, candidate, c);
  }
}

void run_extend(InstanceContext& ctx, const CampaignConfig& config) {
  const BaseDerivation delta = config_delta(config);
  const ExtensionResult ext = extend_tower(delta, config.n);
  Rng& rng = ctx.rng();
  const std::vector<std::pair<Matrix, Matrix>> pair{
      {random_matrix(rng, config.ring, config.n, config.max_degree),
       random_matrix(rng, config.ring, config.n, config.max_degree)}};

  const LeibnizReport tower = leibniz_check([&ext](const Matrix& a) { return ext(a); }, pair);
  ctx.count(tower.checked);
  if (tower.violation) ctx.fail("tower " + tower.violation->kind, tower.violation->lhs, tower.violation->rhs);

  if (config.n == 2) {
    const LeibnizReport m2 = leibniz_check(extend_m2(delta), pair);
    ctx.count(m2.checked);
    if (m2.violation) ctx.fail("m2 " + m2.violation->kind, m2.violation->lhs, m2.violation->rhs);
    ctx.count();
    const Matrix& x = pair.front().first;
    if (!(extend_m2(delta)(x) == ext(x))) ctx.fail("m2 vs tower", extend_m2(delta)(x), ext(x));
  }

  // Restriction to R e_{1,1}.
  const RingValue lambda = random_value(rng, config.ring, config.max_degree);
  const Matrix e11 = matrix_unit(config.ring, config.n, 1, 1);
  const Matrix lhs = ext(lambda * e11);
  const Matrix rhs = delta(lambda) * e11;
  ctx.count();
  if (!(lhs == rhs)) ctx.fail("restriction", lhs, rhs);
}

void run_two_generator(InstanceContext& ctx, const CampaignConfig& config) {
  Rng& rng = ctx.rng();
  const Matrix x = random_matrix(rng, config.ring, config.n, config.max_degree);
  const Matrix y = random_matrix(rng, config.ring, config.n, config.max_degree);
  const Matrix d = random_matrix(rng, config.ring, config.n, config.max_degree);
  const WordCheckReport report = two_generator_check(x, y, d, config.max_len);
  ctx.count(report.words + report.splits);
  for (const auto& f : report.failures) ctx.fail(f.kind + " " + f.word, f.lhs, f.rhs);
}

void run_jordan_diag(InstanceContext& ctx, const CampaignConfig& config) {
  Rng& rng = ctx.rng();
  const std::size_t pairs = rng.between(1, 4);
  const JordanPairDerivation pd = random_pair_derivation(rng, config.ring, config.n, pairs, config.max_degree);
  const Matrix s = pairs_to_commutator(pd);

  ctx.count();
  if (!check_diag_zero(pd)) ctx.fail("diag zero", s, Matrix(config.ring, config.n));
  ctx.count();
  if (!is_skew(s)) ctx.fail("reduced form skew", s, -transpose(s));

  const SymmetricMatrix x = random_symmetric(rng, config.ring, config.n, config.max_degree);
  const Matrix action = jordan_inner_apply(pd, x).matrix();
  ctx.count();
  if (!(action == commutator(s, x.matrix()))) ctx.fail("action equivalence", action, commutator(s, x.matrix()));
}

void run_jordan_theorem(InstanceContext& ctx, const CampaignConfig& config) {
  Rng& rng = ctx.rng();
  const std::size_t pairs = rng.between(1, 3);
  const JordanPairDerivation hidden = random_pair_derivation(rng, config.ring, config.n, pairs, config.max_degree);
  const JordanInstance inst = gen_jordan_instance(hidden, ctx.sub_seed(1), true, config.max_degree);
  if (config.samples == 0) return;
  std::vector<SymmetricMatrix> samples;
  samples.reserve(config.samples);
  for (std::size_t k = 0; k < config.samples; ++k) {
    samples.push_back(random_symmetric(rng, config.ring, config.n, config.max_degree));
  }
  const JordanTheoremReport report = verify_jordan_theorem(inst.oracle, inst.family, samples);
  ctx.count(report.checked + report.leibniz_pairs);
  if (report.failure) ctx.fail(report.failure->probe, report.failure->lhs, report.failure->rhs);
}

Outcome run_instance(const CampaignConfig& config, std::size_t index) {
  InstanceContext ctx(index, derive_seed(config.seed, index));
  try {
    switch (config.suite) {
      case Suite::Theorem1:
        run_theorem1(ctx, config);
        break;
      case Suite::LemmaCross:
        run_lemma_cross(ctx, config);
        break;
      case Suite::LemmaOffdiag:
        run_lemma_offdiag(ctx, config);
        break;
      case Suite::LemmaDiagDiff:
        run_lemma_diagdiff(ctx, config);
        break;
      case Suite::Extend:
        run_extend(ctx, config);
        break;
      case Suite::TwoGenerator:
        run_two_generator(ctx, config);
        break;
      case Suite::JordanDiag:
        run_jordan_diag(ctx, config);
        break;
      case Suite::JordanTheorem:
        run_jordan_theorem(ctx, config);
        break;
    }
  } catch (const ContractError& e) {
    // A generated instance that breaks a hypothesis is a finding, not a configuration error.
    ctx.fail("contract", e.what());
  }
  return ctx.take();
}

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::Theorem1, "theorem1"},          {Suite::LemmaCross, "lemma-cross"},
    {Suite::LemmaOffdiag, "lemma-offdiag"}, {Suite::LemmaDiagDiff, "lemma-diagdiff"},
    {Suite::Extend, "extend"},              {Suite::TwoGenerator, "two-generator"},
    {Suite::JordanDiag, "jordan-diag"},     {Suite::JordanTheorem, "jordan-theorem"},
};

const char* failures_key(Suite suite) { return suite == Suite::Extend ? "violations" : "failures"; }

}  // namespace

Suite parse_suite(std::string_view text) {
  for (const auto& [suite, name] : kSuiteNames) {
    if (name == text) return suite;
  }
  throw DomainError("unknown suite '" + std::string(text) + "'");
}

std::string to_string(Suite suite) {
  for (const auto& [s, name] : kSuiteNames) {
    if (s == suite) return std::string(name);
  }
  return {};
}

void validate_config(const CampaignConfig& config) {
  if (config.n < 2) throw DomainError("n must be at least 2 (got " + std::to_string(config.n) + ")");
  if (config.suite == Suite::Extend) config_delta(config);
  if (config.suite == Suite::TwoGenerator && config.max_len < 1) throw DomainError("max-len must be at least 1");
}

Report run_campaign(const CampaignConfig& config) {
  validate_config(config);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Outcome> outcomes(config.trials);
  std::size_t workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(config.trials, 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < config.trials; k = next++) {
      try {
        outcomes[k] = run_instance(config, k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  Report report;
  report.config = config;
  report.instances = config.trials;
  for (auto& outcome : outcomes) {
    report.checked += outcome.checked;
    for (auto& f : outcome.failures) report.failures.push_back(std::move(f));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_to_json(const Report& report) {
  const CampaignConfig& c = report.config;
  Json config = {{"ring", ring_to_json(c.ring)}, {"n", c.n},           {"trials", c.trials},
                 {"seed", c.seed},               {"noise", to_string(c.noise)}, {"max_degree", c.max_degree},
                 {"samples", c.samples}};
  if (c.suite == Suite::TwoGenerator) config["max_len"] = c.max_len;
  if (c.suite == Suite::Extend) config["delta"] = config_delta(c).to_string();

  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"instance", f.instance}, {"seed", f.seed}, {"probe", f.probe}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"suite", to_string(c.suite)},
          {"config", std::move(config)},
          {"instances", report.instances},
          {"checked", report.checked},
          {failures_key(c.suite), std::move(failures)}};
}

std::string report_to_text(const Report& report) {
  const CampaignConfig& c = report.config;
  std::ostringstream out;
  out << "suite " << to_string(c.suite) << "  ring " << c.ring.to_string() << "  n " << c.n << "  trials "
      << c.trials << "  seed " << c.seed << "  noise " << to_string(c.noise) << '\n';
  out << "instances " << report.instances << "  checked " << report.checked << "  " << failures_key(c.suite) << ' '
      << report.failures.size() << '\n';
  for (const auto& f : report.failures) {
    out << "FAIL instance " << f.instance << " seed " << f.seed << " " << f.probe << "\n  lhs " << f.lhs.dump()
        << "\n  rhs " << f.rhs.dump() << '\n';
  }
  out << (report.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

int exit_code(const Report& report) { return report.ok() ? 0 : 1; }

}  // namespace derivring
