#include "supercong/cache.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "supercong/errors.hpp"
#include "supercong/qseries.hpp"

namespace supercong {

CoefficientTable CoefficientTable::compute(std::size_t N) {
  const IntSeries f = modular_form_f(N);
  std::vector<std::int64_t> values(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) values[n] = coefficient(f, n);
  return CoefficientTable(std::move(values));
}

std::int64_t CoefficientTable::operator()(std::size_t n) const {
  if (n > order()) {
    throw Error(ErrorCode::OutOfRange, "c(" + std::to_string(n) + ") beyond table order " + std::to_string(order()));
  }
  return values_[n];
}

void write_cache(std::ostream& out, const CoefficientTable& table) {
  out << "ETAF1 N=" << table.order() << '\n';
  for (std::size_t n = 1; n <= table.order(); ++n) out << n << ' ' << table(n) << '\n';
  out << "END " << table.order() << '\n';
}

namespace {

[[noreturn]] void corrupt(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::CacheCorrupt, "cache line " + std::to_string(line) + ": " + what);
}

// Whole-string integer parse; no sign for unsigned, no whitespace, no leading '+'.
template <typename T>
bool parse_exact(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::size_t first_hecke_violation(const CoefficientTable& table) {
  const std::size_t N = table.order();
  std::vector<std::size_t> spf(N + 1, 0);
  for (std::size_t i = 2; i <= N; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t j = i; j <= N; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  if (N >= 1 && table(1) != 1) return 1;
  for (std::size_t n = 2; n <= N; ++n) {
    const std::size_t p = spf[n];
    std::size_t pk = 1;
    std::size_t m = n;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    __int128 expect = 0;
    if (m > 1) {
      expect = static_cast<__int128>(table(pk)) * table(m);
    } else if (pk == p) {
      continue;  // c(p) is free
    } else if (p == 5) {
      expect = static_cast<__int128>(table(5)) * table(n / 5);
    } else {
      const auto p3 = static_cast<__int128>(p * p * p);
      expect = static_cast<__int128>(table(p)) * table(n / p) - p3 * table(n / p / p);
    }
    if (expect != table(n)) return n;
  }
  return 0;
}

CoefficientTable read_cache(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) corrupt(lineno, "missing header");
  constexpr std::string_view kHeader = "ETAF1 N=";
  std::size_t N = 0;
  if (!line.starts_with(kHeader) || !parse_exact(std::string_view(line).substr(kHeader.size()), N)) {
    corrupt(lineno, "bad header");
  }
  std::vector<std::int64_t> values(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    ++lineno;
    if (!std::getline(in, line)) corrupt(lineno, "truncated");
    const auto space = line.find(' ');
    std::size_t index = 0;
    if (space == std::string::npos || !parse_exact(std::string_view(line).substr(0, space), index) ||
        index != n || !parse_exact(std::string_view(line).substr(space + 1), values[n])) {
      corrupt(lineno, "expected entry for n=" + std::to_string(n));
    }
  }
  ++lineno;
  std::size_t count = 0;
  if (!std::getline(in, line) || !line.starts_with("END ") ||
      !parse_exact(std::string_view(line).substr(4), count) || count != N) {
    corrupt(lineno, "bad trailer");
  }
  while (std::getline(in, line)) {
    ++lineno;
    corrupt(lineno, "data after trailer");
  }
  CoefficientTable table(std::move(values));
  if (const std::size_t bad = first_hecke_violation(table); bad != 0) {
    corrupt(bad + 1, "c(" + std::to_string(bad) + ") breaks the Hecke relations");
  }
  return table;
}

std::string_view to_string(CacheEvent e) noexcept {
  switch (e) {
    case CacheEvent::Computed: return "computed";
    case CacheEvent::Loaded: return "loaded";
    case CacheEvent::RebuiltCorrupt: return "rebuilt-corrupt";
    case CacheEvent::RebuiltTooSmall: return "rebuilt-too-small";
  }
  return "computed";
}

CacheOutcome load_or_build(const std::filesystem::path& path, std::size_t N) {
  CacheOutcome out;
  if (!path.empty() && std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      CoefficientTable table = read_cache(in);
      if (table.order() >= N) {
        out.table = std::move(table);
        out.event = CacheEvent::Loaded;
        return out;
      }
      out.event = CacheEvent::RebuiltTooSmall;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CacheCorrupt) throw;
      out.event = CacheEvent::RebuiltCorrupt;
      out.detail = e.what();
    }
  }
  out.table = CoefficientTable::compute(N);
  if (!path.empty()) {
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream file(tmp, std::ios::trunc);
      if (!file) throw Error(ErrorCode::BadParameters, "cannot write cache " + path.string());
      write_cache(file, out.table);
    }
    std::filesystem::rename(tmp, path);
  }
  return out;
}

}  // namespace supercong
