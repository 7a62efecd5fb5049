// supercong: command-line front end.
//
//   supercong verify conjecture|theorem|identities [--pmin --pmax --precision --order --cache --jobs --format]
//   supercong count --p P --method brute|koblitz|charsum [--lambda L]
//   supercong coeff --n N [--cache PATH]
//   supercong gamma --p P --k K --num A --den B
//
// Exit status: 0 all pass, 1 some check failed, 2 bad usage or configuration.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "supercong/cache.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/point_count.hpp"
#include "supercong/verify.hpp"

namespace sc = supercong;

namespace {

constexpr int kUsage = 2;

void add_run_flags(CLI::App* cmd, sc::RunConfig& cfg, std::string& format) {
  cmd->add_option("--pmin", cfg.pmin, "smallest prime")->check(CLI::PositiveNumber);
  cmd->add_option("--pmax", cfg.pmax, "largest prime")->check(CLI::PositiveNumber);
  cmd->add_option("--precision", cfg.precision, "p-adic precision K")->check(CLI::PositiveNumber);
  cmd->add_option("--order", cfg.order, "q-expansion order N (>= pmax)")->check(CLI::PositiveNumber);
  cmd->add_option("--cache", cfg.cache_path, "c(n) cache file");
  cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

int emit(const std::vector<sc::VerificationReport>& reports, sc::OutputFormat fmt) {
  std::cout << sc::render(reports, fmt);
  return sc::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercongruence verification toolkit"};
  app.require_subcommand(1);

  sc::RunConfig cfg;
  std::string format = "json";
  std::string which;
  auto* verify = app.add_subcommand("verify", "run a verification batch");
  verify->add_option("which", which, "conjecture, theorem or identities")
      ->required()
      ->check(CLI::IsMember({"conjecture", "theorem", "identities"}));
  add_run_flags(verify, cfg, format);

  std::uint64_t count_p = 0;
  std::uint64_t lambda = 1;
  std::string method = "brute";
  unsigned count_jobs = 1;
  auto* count = app.add_subcommand("count", "points on the Dwork quintic over F_p");
  count->add_option("--p", count_p, "prime")->required();
  count->add_option("--method", method, "brute, koblitz or charsum")
      ->check(CLI::IsMember({"brute", "koblitz", "charsum"}));
  count->add_option("--lambda", lambda, "family parameter");
  count->add_option("--jobs", count_jobs, "threads for brute force")->check(CLI::PositiveNumber);

  std::size_t coeff_n = 0;
  std::string coeff_cache;
  auto* coeff = app.add_subcommand("coeff", "coefficient c(n) of f");
  coeff->add_option("--n", coeff_n, "index")->required()->check(CLI::PositiveNumber);
  coeff->add_option("--cache", coeff_cache, "c(n) cache file");

  std::uint64_t gamma_p = 0;
  unsigned gamma_k = 0;
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto* gamma = app.add_subcommand("gamma", "Morita Gamma_p(num/den) mod p^K");
  gamma->add_option("--p", gamma_p, "prime")->required();
  gamma->add_option("--k", gamma_k, "precision")->required()->check(CLI::PositiveNumber);
  gamma->add_option("--num", num, "numerator")->required();
  gamma->add_option("--den", den, "denominator")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      cfg.format = format == "csv" ? sc::OutputFormat::Csv : sc::OutputFormat::Json;
      if (which == "conjecture") return emit(sc::run_conjecture(cfg), cfg.format);
      if (which == "theorem") return emit(sc::run_theorem_equality(cfg), cfg.format);
      return emit(sc::run_identity_suite(cfg), cfg.format);
    }
    if (*count) {
      const auto m = sc::parse_count_method(method);
      sc::CountResult r;
      switch (m) {
        case sc::CountMethod::Brute: r = sc::count_brute(count_p, lambda, count_jobs); break;
        case sc::CountMethod::Koblitz: r = sc::count_koblitz(count_p, lambda); break;
        case sc::CountMethod::CharSum: r = sc::count_charsum(count_p, lambda); break;
      }
      nlohmann::ordered_json j;
      j["p"] = r.p;
      j["lambda"] = r.lambda;
      j["method"] = std::string(sc::to_string(r.method));
      j["count"] = r.projective_count;
      std::cout << j.dump() << '\n';
      return 0;
    }
    if (*coeff) {
      const auto table = sc::load_or_build(coeff_cache, coeff_n).table;
      std::cout << table(coeff_n) << '\n';
      return 0;
    }
    if (*gamma) {
      const sc::Modulus mod(gamma_p, gamma_k);
      std::cout << sc::gamma_p(sc::RationalArg(num, den), mod).value() << '\n';
      return 0;
    }
  } catch (const sc::Error& e) {
    std::cerr << "supercong: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
