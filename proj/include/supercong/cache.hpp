#pragma once

// On-disk table of the coefficients c(1..N) of f.
//
//   ETAF1 N=<order>
//   <n> <c(n)>        one line per n = 1..N, ascending
//   END <count>
//
// Parsing is strict: any deviation, or a table that breaks the Hecke
// relations of f, raises CacheCorrupt.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace supercong {

/// c(0..N) with c(0) = 0.
class CoefficientTable {
 public:
  CoefficientTable() = default;
  explicit CoefficientTable(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  /// Expands f to order N.
  static CoefficientTable compute(std::size_t N);

  std::size_t order() const noexcept { return values_.empty() ? 0 : values_.size() - 1; }
  std::int64_t operator()(std::size_t n) const;
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Smallest n at which c(mn) = c(m)c(n) (coprime m, n) or
/// c(p^{k+1}) = c(p)c(p^k) - p^3 c(p^{k-1}) (c(5^k) = c(5)^k) fails; 0 if none.
/// Catches most edits to a cache file; values at primes above N/2 are unconstrained.
std::size_t first_hecke_violation(const CoefficientTable& table);

void write_cache(std::ostream& out, const CoefficientTable& table);
CoefficientTable read_cache(std::istream& in);

enum class CacheEvent { Computed, Loaded, RebuiltCorrupt, RebuiltTooSmall };
std::string_view to_string(CacheEvent e) noexcept;

struct CacheOutcome {
  CoefficientTable table;
  CacheEvent event = CacheEvent::Computed;
  std::string detail;  // parse error for RebuiltCorrupt
};

/// Loads the table from `path` when it exists, is well formed and reaches
/// order N; otherwise expands f to order N and rewrites the file. An empty
/// path disables the cache.
CacheOutcome load_or_build(const std::filesystem::path& path, std::size_t N);

}  // namespace supercong
