#pragma once

// Truncated hypergeometric series and the p-adic function nG built from
// Gamma_p, together with the congruences tying them to each other and to the
// finite-field hypergeometric function.

#include <cstdint>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/report.hpp"

namespace supercong {

struct HypergeomSpec {
  std::vector<RationalArg> upper;
  std::vector<RationalArg> lower;
  RationalArg z{1};
  std::uint64_t truncation = 0;
};

/// Parameters m_i/d_i of nG, each strictly between 0 and 1.
struct GSpec {
  std::vector<RationalArg> fractions;
};

/// 4F3(1/d, r/d, 1-r/d, 1-1/d; 1, 1, 1 | 1) truncated at p-1.
HypergeomSpec quartic_series_spec(std::int64_t d, std::int64_t r, std::uint64_t p);

/// (1/d, r/d, 1-r/d, 1-1/d).
GSpec quartic_g_spec(std::int64_t d, std::int64_t r);

/// (a)_n = a (a+1) ... (a+n-1) mod p^K.
Residue rising_factorial(const RationalArg& a, std::uint64_t n, const Modulus& mod);

/// sum_{n <= m} prod (a_i)_n / prod (b_j)_n * z^n / n!, by incremental term
/// ratios. Throws TermNotPIntegral when a ratio has p in its denominator.
Residue truncated_hypergeom(const HypergeomSpec& spec, const Modulus& mod);

/// nG(m_1/d_1, ..., m_{n+1}/d_{n+1}) mod p^K for odd p, with every Gamma_p
/// value from a single batch sweep.
Residue n_plus_one_g(const GSpec& spec, const Modulus& mod);

/// Gamma_p(1/d) Gamma_p(r/d) Gamma_p((d-r)/d) Gamma_p((d-1)/d).
Residue s_factor(std::int64_t d, std::int64_t r, const Modulus& mod);

/// True iff (d, r, p) satisfy the hypotheses of the quartic nG supercongruence.
bool quartic_conditions_hold(std::int64_t d, std::int64_t r, std::uint64_t p) noexcept;

/// 4G(1/d, r/d, 1-r/d, 1-1/d) = 4F3(...)_{p-1} + s(p) p (mod p^K), K = 3 by default.
VerificationReport check_thm_4g2(std::int64_t d, std::int64_t r, std::uint64_t p, unsigned K = 3);

/// nG(m_i/d_i) = (-p)^n nF_{n-1}(rho_i^{m_i}; eps, ..., eps | 1) for
/// p = 1 mod every d_i, rho_i = omega-bar^{(p-1)/d_i}.
VerificationReport check_prop_gtoghs(const GSpec& spec, std::uint64_t p, unsigned K);

/// -p^3 4F3(chi_5, chi_5^2, chi_5^3, chi_5^4; eps, eps, eps | 1) - p = c(p)
/// for p = 1 mod 5, with chi_5 = omega-bar^{(p-1)/5}.
VerificationReport check_greene_to_cp(std::uint64_t p, unsigned K, std::int64_t c_p);

}  // namespace supercong
