// derivring: seeded verification campaigns from the command line.
//
//   derivring verify theorem1 --n 3 --ring zmod:5 --noise central --trials 200 --seed 42
//   derivring extend --n 4 --ring poly:zmod:5 --delta d/dt --trials 1000 --seed 1
//
// Exit status: 0 all properties held, 1 a property was violated, 2 bad configuration.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "derivring/campaign.hpp"

namespace {

struct Options {
  std::string suite;
  std::string ring = "zmod:5";
  std::size_t n = 2;
  std::size_t trials = 1;
  std::optional<std::uint64_t> seed;
  std::string noise = "none";
  unsigned max_degree = 3;
  std::size_t samples = 50;
  std::size_t max_len = 6;
  std::optional<std::string> delta;
  std::string format = "json";
  std::string out;
  std::size_t threads = 0;
};

void add_campaign_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--ring", opt.ring, "zmod:M or poly:zmod:M (M odd)")->capture_default_str();
  cmd->add_option("--n", opt.n, "matrix dimension (>= 2)")->capture_default_str();
  cmd->add_option("--trials", opt.trials, "number of seeded instances")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "base seed (falls back to $DERIVRING_SEED, then 0)");
  cmd->add_option("--noise", opt.noise, "none | central | x0-commutant")->capture_default_str();
  cmd->add_option("--max-degree", opt.max_degree, "degree cap for random polynomial entries")
      ->capture_default_str();
  cmd->add_option("--samples", opt.samples, "samples per instance for theorem suites")->capture_default_str();
  cmd->add_option("--max-len", opt.max_len, "word length for two-generator")->capture_default_str();
  cmd->add_option("--delta", opt.delta, "zero | d/dt | t*d/dt (extend)");
  cmd->add_option("--format", opt.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "write the report here instead of stdout");
  cmd->add_option("--threads", opt.threads, "worker threads (0 = all cores)")->capture_default_str();
}

std::uint64_t resolve_seed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("DERIVRING_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t seed = std::stoull(env, &used);
      if (used == std::string(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw derivring::DomainError(std::string("DERIVRING_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

int run(const Options& opt) {
  derivring::CampaignConfig config;
  config.suite = derivring::parse_suite(opt.suite);
  config.ring = derivring::RingDescriptor::parse(opt.ring);
  config.n = opt.n;
  config.trials = opt.trials;
  config.seed = resolve_seed(opt);
  config.noise = derivring::parse_noise(opt.noise);
  config.max_degree = opt.max_degree;
  config.samples = opt.samples;
  config.max_len = opt.max_len;
  config.delta = opt.delta;
  config.threads = opt.threads;

  const derivring::Report report = derivring::run_campaign(config);
  const std::string text =
      opt.format == "json" ? derivring::report_to_json(report).dump(2) + "\n" : derivring::report_to_text(report);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw derivring::DomainError("cannot open " + opt.out + " for writing");
    file << text;
  }
  std::cerr << derivring::to_string(config.suite) << ": " << report.instances << " instances, "
            << report.failures.size() << " failures, " << report.wall_seconds << " s\n";
  return derivring::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of derivations and 2-local derivations on matrix rings"};
  app.require_subcommand(1);

  Options opt;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", opt.suite,
                     "theorem1 | lemma-cross | lemma-offdiag | lemma-diagdiff | extend | two-generator | "
                     "jordan-diag | jordan-theorem")
      ->required();
  add_campaign_options(verify, opt);

  auto* extend = app.add_subcommand("extend", "shorthand for 'verify extend'");
  add_campaign_options(extend, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (extend->parsed()) opt.suite = "extend";

  try {
    return run(opt);
  } catch (const derivring::Error& e) {
    std::cerr << "derivring: " << e.what() << '\n';
    return 2;
  }
}
