#include "supercong/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include "supercong/char_sums.hpp"
#include "supercong/gk_ring.hpp"
#include "supercong/hypergeom.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/point_count.hpp"

namespace supercong {

std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      try {
        out[i] = timed(t.run);
      } catch (const std::exception& e) {
        VerificationReport r;
        r.identity = t.identity;
        r.prime = t.prime;
        r.params = t.params;
        r.status = Status::Fail;
        r.note = std::string("error: ") + e.what();
        out[i] = std::move(r);
      }
    }
  };
  const unsigned threads = std::clamp<unsigned>(jobs, 1, std::max<std::size_t>(tasks.size(), 1));
  if (threads == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  pool.clear();
  return out;
}

RunConfig resolve(RunConfig config, std::uint64_t default_pmax, unsigned default_K) {
  if (config.pmax == 0) config.pmax = default_pmax;
  if (config.precision == 0) config.precision = default_K;
  if (config.order == 0) config.order = config.pmax;
  if (config.jobs == 0) config.jobs = 1;
  if (config.pmin > config.pmax) throw Error(ErrorCode::BadParameters, "pmin exceeds pmax");
  if (config.order < config.pmax) throw Error(ErrorCode::BadParameters, "order N must be at least pmax");
  if (config.precision < 3) throw Error(ErrorCode::BadParameters, "precision K must be at least 3");
  // Every modulus p^K has to stay below 2^62.
  std::uint64_t m = 1;
  for (unsigned k = 0; k < config.precision; ++k) {
    if (m > (std::uint64_t{1} << 62) / config.pmax) {
      throw Error(ErrorCode::BadParameters, "pmax^K does not fit the residue width");
    }
    m *= config.pmax;
  }
  return config;
}

namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

std::string k_param(unsigned K) { return "K=" + std::to_string(K); }

VerificationReport compare_integers(std::string identity, std::uint64_t p, std::string params, std::int64_t lhs,
                                    std::int64_t rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.prime = p;
  r.params = std::move(params);
  r.lhs = std::to_string(lhs);
  r.rhs = std::to_string(rhs);
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  r.note = "exact integers";
  return r;
}

VerificationReport compare_counts(std::uint64_t p, const CountResult& a, const CountResult& b) {
  const std::string params = std::string(to_string(a.method)) + " vs " + std::string(to_string(b.method));
  return compare_integers("point-count", p, params, static_cast<std::int64_t>(a.projective_count),
                          static_cast<std::int64_t>(b.projective_count));
}

}  // namespace

std::vector<VerificationReport> run_conjecture(const RunConfig& raw, const CoefficientTable& c) {
  const RunConfig config = resolve(raw, kConjectureMax, 3);
  std::vector<Task> tasks;
  for (std::uint64_t p : primes_between(config.pmin, config.pmax)) {
    const std::string params = k_param(config.precision);
    if (p == 5) {
      tasks.push_back({"quartic-supercongruence", p, params,
                       [=] { return skipped("quartic-supercongruence", p, params, "p = 5 is excluded"); }});
      continue;
    }
    const std::int64_t cp = c(p);
    tasks.push_back({"quartic-supercongruence", p, params, [=, K = config.precision] {
                       const Modulus mod(p, K);
                       const Residue lhs = truncated_hypergeom(quartic_series_spec(5, 2, p), mod);
                       return compare("quartic-supercongruence", params, lhs, Residue(mod, cp));
                     }});
  }
  return run_tasks(tasks, config.jobs);
}

std::vector<VerificationReport> run_conjecture(const RunConfig& raw) {
  const RunConfig config = resolve(raw, kConjectureMax, 3);
  return run_conjecture(config, load_or_build(config.cache_path, config.order).table);
}

std::vector<VerificationReport> run_theorem_equality(const RunConfig& raw, const CoefficientTable& c) {
  const RunConfig config = resolve(raw, kTheoremMax, 4);
  std::vector<Task> tasks;
  for (std::uint64_t p : primes_between(std::max<std::uint64_t>(config.pmin, 3), config.pmax)) {
    const std::string params = k_param(config.precision);
    if (p == 5) {
      tasks.push_back({"g4-equality", p, params,
                       [=] { return skipped("g4-equality", p, params, "p = 5 is excluded"); }});
      continue;
    }
    const std::int64_t cp = c(p);
    tasks.push_back({"g4-equality", p, params, [=, K = config.precision] {
                       const Modulus mod(p, K);
                       const Residue lhs = n_plus_one_g(quartic_g_spec(5, 2), mod) -
                                           s_factor(5, 2, mod) * static_cast<std::int64_t>(p);
                       VerificationReport r = compare("g4-equality", params, lhs, Residue(mod, cp));
                       r.note = "exact p-adic identity checked mod p^" + std::to_string(K) + " only";
                       return r;
                     }});
  }
  return run_tasks(tasks, config.jobs);
}

std::vector<VerificationReport> run_theorem_equality(const RunConfig& raw) {
  const RunConfig config = resolve(raw, kTheoremMax, 4);
  return run_theorem_equality(config, load_or_build(config.cache_path, config.order).table);
}

std::vector<Task> identity_tasks(const CoefficientTable& c) {
  std::vector<Task> tasks;
  const auto add = [&](std::string identity, std::uint64_t p, std::string params,
                       std::function<VerificationReport()> run) {
    tasks.push_back({std::move(identity), p, std::move(params), std::move(run)});
  };
  constexpr unsigned K = 3;

  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(p - 1); ++a) {
      const std::string params = "chi=omega^" + std::to_string(a);
      add("orthogonality-elements", p, params, [=] {
        const Modulus mod(p, K);
        return compare("orthogonality-elements", params, orthogonality_element(a, mod),
                       Residue(mod, a == 0 ? static_cast<std::int64_t>(p - 1) : 0));
      });
    }
    for (std::uint64_t x = 1; x < p; ++x) {
      const std::string params = "x=" + std::to_string(x);
      add("orthogonality-characters", p, params, [=] {
        const Modulus mod(p, K);
        return compare("orthogonality-characters", params, orthogonality_character(x, mod),
                       Residue(mod, x == 1 ? static_cast<std::int64_t>(p - 1) : 0));
      });
    }
  }

  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      add("gauss-pair-product", p, "chi=omega^-" + std::to_string(j), [=] {
        return check_gauss_pair_product(j, GaussSumTable(Modulus(p, K), GaussRoute::Direct));
      });
    }
  }

  for (std::uint64_t x = 1; x < 7; ++x) {
    add("additive-expansion", 7, "x=" + std::to_string(x), [=] {
      const Modulus mod(7, K);
      return check_additive_expansion(x, GaussSumTable(mod, GaussRoute::Direct), AdditiveCharacter(mod));
    });
  }

  for (std::uint64_t m : {2, 5}) {
    for (std::uint64_t j = 0; j < 10; ++j) {
      add("hasse-davenport", 11, "m=" + std::to_string(m) + " psi=omega^-" + std::to_string(j),
          [=] { return check_hasse_davenport(m, j, Modulus(11, K)); });
    }
  }

  // Characters of order dividing 5 at p = 11 are omega^{2i}; tuples up to order.
  {
    constexpr std::uint64_t p = 11;
    std::vector<std::vector<CharExponent>> tuples;
    for (std::size_t k = 2; k <= 4; ++k) {
      std::vector<CharExponent> t(k, 0);
      const auto rec = [&](auto&& self, std::size_t i, CharExponent lo) -> void {
        if (i == k) {
          tuples.push_back(t);
          return;
        }
        for (CharExponent e = lo; e < 10; e += 2) {
          t[i] = e;
          self(self, i + 1, e);
        }
      };
      rec(rec, 0, 0);
    }
    for (const auto& t : tuples) {
      const bool trivial_product = std::accumulate(t.begin(), t.end(), CharExponent{0}) % 10 == 0;
      const bool all_trivial = std::all_of(t.begin(), t.end(), [](CharExponent e) { return e == 0; });
      if (all_trivial) continue;
      std::string params = "chars=";
      for (std::size_t i = 0; i < t.size(); ++i) params += (i ? "," : "") + std::to_string(t[i]);
      add("jacobi-to-gauss", p, params, [=] { return jacobi_to_gauss_check(t, Modulus(p, K)); });
      if (trivial_product && t.size() >= 3) {
        add("jacobi-reduction", p, params, [=] { return jacobi_reduction_check(t, Modulus(p, K)); });
      }
    }
  }

  for (std::uint64_t p : {11, 31}) {
    for (std::int64_t a = 0; a < 5; ++a) {
      for (std::int64_t b = 0; b < 5; ++b) {
        for (std::int64_t cc = 0; cc < 5; ++cc) {
          if (!twisted_sum_admissible(a, b, cc)) continue;
          const std::string params =
              "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(cc);
          const auto q = static_cast<std::int64_t>(p);
          add("twisted-jacobi-sum", p, params, [=] {
            const Modulus mod(p, K);
            return compare("twisted-jacobi-sum", params, twisted_jacobi_sum(a, b, cc, mod), Residue(mod, -(q - 1)));
          });
          add("twisted-gauss-sum", p, params, [=] {
            const Modulus mod(p, K);
            return compare("twisted-gauss-sum", params, twisted_gauss_sum(a, b, cc, mod),
                           Residue(mod, -q * (q - 1)));
          });
        }
      }
    }
  }

  for (std::uint64_t p : {7, 11, 13}) {
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(p); ++r) {
      const RationalArg x(r, static_cast<std::int64_t>(p - 1));
      add("gamma-multiplication", p, "m=5 x=" + x.str(),
          [=] { return check_mult_formula(5, x, Modulus(p, K)); });
    }
  }

  for (std::uint64_t p : {3, 7, 11, 13}) {
    for (std::uint64_t j = 0; j + 1 < p; ++j) {
      const std::string params = "j=" + std::to_string(j);
      add("gross-koblitz", p, params, [=] {
        const Modulus mod(p, K);
        return compare_elements("gross-koblitz", params, gauss_sum_direct(j, mod), gauss_sum_gk(j, mod));
      });
    }
  }

  for (std::uint64_t p = 3; p <= 97; p += 2) {
    if (!is_prime(p) || p == 5) continue;
    add("g4-supercongruence", p, "d=5 r=2", [=] { return check_thm_4g2(5, 2, p, K); });
  }

  for (std::uint64_t p : {11, 31}) {
    add("g-to-greene", p, "1/5,2/5,3/5,4/5", [=] { return check_prop_gtoghs(quartic_g_spec(5, 2), p, K); });
    add("g-to-greene", p, "1/2,1/2",
        [=] { return check_prop_gtoghs(GSpec{{RationalArg(1, 2), RationalArg(1, 2)}}, p, K); });
    const std::int64_t cp = c(p);
    add("greene-to-cp", p, "", [=] { return check_greene_to_cp(p, K, cp); });
  }

  add("koblitz-listing", 11, "d=5 n=5", [] { return check_koblitz_listing(); });

  for (std::uint64_t p : {3, 7, 13}) {
    add("point-count", p, "brute vs charsum", [=] { return compare_counts(p, count_brute(p), count_charsum(p)); });
  }
  for (std::uint64_t p : {11, 31}) {
    add("point-count", p, "brute vs koblitz", [=] { return compare_counts(p, count_brute(p), count_koblitz(p)); });
  }
  add("point-count", 2, "brute vs 16", [] {
    return compare_integers("point-count", 2, "brute vs 16", static_cast<std::int64_t>(count_brute(2).projective_count), 16);
  });
  for (std::uint64_t p : {2, 3, 7, 11, 13, 31}) {
    const std::int64_t cp = c(p);
    add("count-to-cp", p, "", [=] {
      return compare_integers("count-to-cp", p, "", schoen_cp(p, count_brute(p).projective_count), cp);
    });
  }

  for (std::uint64_t p = 3; p <= kBruteForceLimit; p += 2) {
    if (!is_prime(p) || p == 5) continue;
    add("count-plus-g4", p, "", [=] { return check_n_to_g(p); });
  }

  for (std::uint64_t p : {3, 7}) {
    add("fifth-power-sum", p, "", [=] { return check_fifth_power_sum(p, K); });
  }
  return tasks;
}

std::vector<VerificationReport> run_identity_suite(const RunConfig& config) {
  const CacheOutcome cached = load_or_build(config.cache_path, std::max(config.order, kIdentityOrder));
  return run_tasks(identity_tasks(cached.table), std::max(config.jobs, 1u));
}

bool all_passed(const std::vector<VerificationReport>& reports) noexcept {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.status != Status::Fail; });
}

std::string render(const std::vector<VerificationReport>& reports, OutputFormat format, bool include_timing) {
  std::ostringstream os;
  if (format == OutputFormat::Csv) os << csv_header() << '\n';
  for (const auto& r : reports) {
    os << (format == OutputFormat::Json ? to_json_line(r, include_timing) : to_csv_line(r, include_timing)) << '\n';
  }
  return os.str();
}

}  // namespace supercong
