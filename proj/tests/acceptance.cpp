// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "derivring/campaign.hpp"
#include "derivring/deriv_assoc.hpp"
#include "derivring/jordan.hpp"
#include "derivring/random.hpp"

using namespace derivring;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CampaignConfig campaign(Suite suite, const RingDescriptor& ring, std::size_t n, std::size_t trials,
                        std::uint64_t seed) {
  CampaignConfig c;
  c.suite = suite;
  c.ring = ring;
  c.n = n;
  c.trials = trials;
  c.seed = seed;
  c.samples = 50;
  return c;
}

std::string describe(const Report& r) {
  return to_string(r.config.suite) + " n=" + std::to_string(r.config.n) + " " + r.config.ring.to_string() +
         " noise=" + to_string(r.config.noise) + ": " + std::to_string(r.failures.size()) + " failures";
}

const std::vector<RingDescriptor> kTheoremRings = {RingDescriptor::zmod(5), RingDescriptor::zmod(9),
                                                   RingDescriptor::poly_over(RingDescriptor::zmod(5))};
const NoiseSpec kNoises[] = {NoiseSpec::None, NoiseSpec::CentralShifts, NoiseSpec::X0CommutantShiftOnC};

Outcome criterion1() {
  const auto start = Clock::now();
  Outcome out;
  std::size_t instances = 0;
  std::uint64_t seed = 100;
  for (std::size_t n : {2u, 3u, 4u}) {
    for (const auto& ring : kTheoremRings) {
      for (auto noise : kNoises) {
        auto config = campaign(Suite::Theorem1, ring, n, 200, ++seed);
        config.noise = noise;
        const auto report = run_campaign(config);
        instances += report.instances;
        if (!report.ok() || report.instances != 200) {
          out.pass = false;
          out.detail = describe(report);
        }
        // ā - hidden commutes with every matrix unit, recomputed outside the campaign.
        for (std::size_t k = 0; k < 200; ++k) {
          Rng rng(derive_seed(seed, k) ^ 0x5eed);
          const auto hidden = random_matrix(rng, ring, n, 3);
          const auto inst = gen_witness_family(hidden, noise, derive_seed(seed, k));
          const auto diff = reconstruct_abar(inst.family).abar - hidden;
          for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
              if (!commutator(diff, matrix_unit(ring, n, i, j)).is_zero()) {
                out.pass = false;
                out.detail = "[abar - hidden, e_ij] != 0";
              }
        }
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 60) {
    out.pass = false;
    out.detail = "runtime over 60 s";
  }
  if (out.pass) out.detail = std::to_string(instances) + " instances, 0 failures, " + std::to_string(t) + " s";
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::size_t instances = 0;
  std::uint64_t seed = 200;
  for (auto suite : {Suite::LemmaCross, Suite::LemmaOffdiag, Suite::LemmaDiagDiff}) {
    for (auto noise : kNoises) {
      auto config = campaign(suite, RingDescriptor::zmod(9), 4, 500, ++seed);
      config.noise = noise;
      const auto report = run_campaign(config);
      instances += report.instances;
      if (!report.ok() || report.instances != 500) {
        out.pass = false;
        out.detail = describe(report);
      }
    }
  }
  if (out.pass) out.detail = std::to_string(instances) + " instances over 3 suites x 3 noise modes, 0 failures";
  return out;
}

Outcome criterion3() {
  Outcome out;
  const auto ring = RingDescriptor::poly_over(RingDescriptor::zmod(5));
  Rng rng(300);
  std::size_t maps = 0;
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    for (const char* name : {"zero", "d/dt", "t*d/dt"}) {
      const auto delta = BaseDerivation::parse(ring, name);
      std::vector<std::pair<std::string, MatrixMap>> targets{{"tower", extend_tower(delta, n)}};
      if (n == 2) targets.emplace_back("m2", extend_m2(delta));
      for (const auto& [label, d] : targets) {
        ++maps;
        std::vector<std::pair<Matrix, Matrix>> samples;
        for (int k = 0; k < 1000; ++k) {
          auto x = random_matrix(rng, ring, n, 3);
          auto y = random_matrix(rng, ring, n, 3);
          samples.emplace_back(std::move(x), std::move(y));
        }
        const auto report = leibniz_check(d, samples);
        const std::string where = label + " n=" + std::to_string(n) + " delta=" + name;
        if (!report.ok() || report.checked != 1000) {
          out.pass = false;
          out.detail = where + ": " + report.violation->kind + " violation";
        }
        const auto e11 = matrix_unit(ring, n, 1, 1);
        for (int k = 0; k < 200; ++k) {
          const auto lambda = random_value(rng, ring, 3);
          if (!(d(lambda * e11) == delta(lambda) * e11)) {
            out.pass = false;
            out.detail = where + ": restriction to R e11 differs from delta";
          }
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(maps) + " maps, 1000 Leibniz pairs and 200 restrictions each";
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto ring = RingDescriptor::zmod(5);
  std::size_t words = 0;
  std::size_t splits = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(derive_seed(400, k));
    const auto x = random_matrix(rng, ring, 2, 0);
    const auto y = random_matrix(rng, ring, 2, 0);
    const auto d = random_matrix(rng, ring, 2, 0);
    const auto report = two_generator_check(x, y, d, 6);
    words += report.words;
    splits += report.splits;
    if (!report.ok()) {
      out.pass = false;
      out.detail = "triple " + std::to_string(k) + ": " + report.failures.front().kind + " at " +
                   report.failures.front().word;
    }
  }
  if (out.pass) {
    out.detail = "100 triples, " + std::to_string(words) + " words, " + std::to_string(splits) + " splits agree";
  }
  return out;
}

Outcome criterion5() {
  Outcome out;
  const auto ring = RingDescriptor::zmod(9);
  Rng rng(500);
  for (int k = 0; k < 1000; ++k) {
    const auto pd = random_pair_derivation(rng, ring, 4, 1 + rng.below(4), 0);
    const auto x = random_symmetric(rng, ring, 4, 0);
    if (!(jordan_inner_apply(pd, x).matrix() == commutator(pairs_to_commutator(pd), x.matrix()))) {
      out.pass = false;
      out.detail = "action mismatch on sample " + std::to_string(k);
    }
  }
  for (int k = 0; k < 500; ++k) {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    const auto count = 1 + rng.below(5);
    for (std::uint64_t p = 0; p < count; ++p) {
      auto a = random_symmetric(rng, ring, 4, 0).matrix();
      auto b = random_symmetric(rng, ring, 4, 0).matrix();
      pairs.emplace_back(std::move(a), std::move(b));
    }
    if (!check_diag_zero(pairs)) {
      out.pass = false;
      out.detail = "nonzero diagonal on pair list " + std::to_string(k);
    }
  }
  if (out.pass) out.detail = "1000 action samples and 500 pair lists in H_4(Z_9)";
  return out;
}

Outcome criterion6() {
  const auto start = Clock::now();
  Outcome out;
  std::size_t checked = 0;
  std::uint64_t seed = 600;
  for (std::size_t n : {2u, 3u}) {
    for (const auto& ring : {RingDescriptor::zmod(5), RingDescriptor::zmod(9)}) {
      const auto report = run_campaign(campaign(Suite::JordanTheorem, ring, n, 200, ++seed));
      checked += report.checked;
      if (!report.ok() || report.instances != 200) {
        out.pass = false;
        out.detail = describe(report);
      }
    }
  }
  const double t = seconds_since(start);
  if (t >= 60) {
    out.pass = false;
    out.detail = "runtime over 60 s";
  }
  if (out.pass) {
    out.detail = "800 instances, " + std::to_string(checked) + " identities, 0 failures, " + std::to_string(t) + " s";
  }
  return out;
}

Outcome criterion7() {
  Outcome out;
  for (auto suite : {Suite::Theorem1, Suite::LemmaDiagDiff, Suite::Extend, Suite::JordanTheorem}) {
    const auto ring = suite == Suite::Extend ? RingDescriptor::poly_over(RingDescriptor::zmod(5))
                                             : RingDescriptor::zmod(9);
    auto config = campaign(suite, ring, 3, 50, 700);
    config.noise = NoiseSpec::X0CommutantShiftOnC;
    config.threads = 1;
    const auto a = report_to_json(run_campaign(config)).dump(2);
    config.threads = 0;
    const auto b = report_to_json(run_campaign(config)).dump(2);
    const auto c = report_to_text(run_campaign(config));
    const auto d = report_to_text(run_campaign(config));
    if (a != b || c != d) {
      out.pass = false;
      out.detail = to_string(suite) + " report differs between identical runs";
    }
  }
  Rng rng(701);
  const RingDescriptor rings[] = {RingDescriptor::zmod(5), RingDescriptor::zmod(9),
                                  RingDescriptor::poly_over(RingDescriptor::zmod(5)),
                                  RingDescriptor::poly_over(RingDescriptor::zmod(9))};
  for (int k = 0; k < 1000; ++k) {
    const auto m = random_matrix(rng, rings[k % 4], 1 + rng.below(5), 4);
    const auto text = dump_matrix(m);
    const auto back = parse_matrix(text);
    if (!(back == m) || dump_matrix(back) != text) {
      out.pass = false;
      out.detail = "round trip changed matrix " + std::to_string(k);
    }
  }
  if (out.pass) out.detail = "byte-identical reports for 4 suites; 1000 matrices round-trip";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"2-local inner derivations of M_n(R) are inner", criterion1},
      {"lemma identities at n = 4 over Z_9", criterion2},
      {"extension of delta is a derivation restricting to delta", criterion3},
      {"derivations of a two-generated ring are inner", criterion4},
      {"Jordan pair lists act as commutators", criterion5},
      {"2-local derivations of H_n(R) are inner", criterion6},
      {"determinism and JSON round trip", criterion7},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu %s: %s (%s)\n", k + 1, outcome.pass ? "PASS" : "FAIL", criteria[k].first,
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
