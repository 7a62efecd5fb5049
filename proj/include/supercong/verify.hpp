#pragma once

// Batch drivers: the quartic supercongruence over a prime range, the exact
// 4G identity at extra precision, and the fixed identity suite. Work items
// run on a small thread pool; reports come back in submission order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "supercong/cache.hpp"
#include "supercong/report.hpp"

namespace supercong {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::uint64_t pmin = 2;
  std::uint64_t pmax = 0;   // 0: per-run default (199 conjecture, 97 theorem)
  unsigned precision = 0;   // 0: per-run default (3 conjecture, 4 theorem)
  std::size_t order = 0;    // 0: pmax
  std::string cache_path;   // empty: no cache file
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::Json;
};

inline constexpr std::uint64_t kConjectureMax = 199;
inline constexpr std::uint64_t kTheoremMax = 97;

/// A deferred check. `identity`, `prime` and `params` label the failure report
/// produced if `run` throws.
struct Task {
  std::string identity;
  std::uint64_t prime = 0;
  std::string params;
  std::function<VerificationReport()> run;
};

/// Runs every task with up to `jobs` threads. Exceptions become Fail reports
/// carrying the message in `note`. Output order equals input order.
std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs);

/// Config with defaults filled in for a run whose natural upper bound is
/// `default_pmax` and precision `default_K`. Throws BadParameters.
RunConfig resolve(RunConfig config, std::uint64_t default_pmax, unsigned default_K);

/// 4F3(1/5,2/5,3/5,4/5;1,1,1|1)_{p-1} = c(p) mod p^K for primes in range; p = 5 skipped.
std::vector<VerificationReport> run_conjecture(const RunConfig& config, const CoefficientTable& c);
std::vector<VerificationReport> run_conjecture(const RunConfig& config);

/// 4G(1/5,2/5,3/5,4/5) - s(p) p = c(p) mod p^K (K = 4 by default), odd p != 5.
std::vector<VerificationReport> run_theorem_equality(const RunConfig& config, const CoefficientTable& c);
std::vector<VerificationReport> run_theorem_equality(const RunConfig& config);

/// Fixed identity suite; only `jobs` is read from the config.
std::vector<Task> identity_tasks(const CoefficientTable& c);
std::vector<VerificationReport> run_identity_suite(const RunConfig& config);

/// Order of c(n) the identity suite needs.
inline constexpr std::size_t kIdentityOrder = 31;

bool all_passed(const std::vector<VerificationReport>& reports) noexcept;

/// One record per line (CSV with a header line).
std::string render(const std::vector<VerificationReport>& reports, OutputFormat format,
                   bool include_timing = true);

}  // namespace supercong
