#pragma once

// Points on the Dwork quintic x1^5 + ... + x5^5 - 5 lambda x1 x2 x3 x4 x5 = 0
// in P^4(F_p), counted by enumeration, by Koblitz's Gauss-sum formula
// (p = 1 mod 5), and by the additive-character expansion (p != 1 mod 5).

#include <array>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/report.hpp"

namespace supercong {

enum class CountMethod { Brute, Koblitz, CharSum };

std::string_view to_string(CountMethod m) noexcept;
CountMethod parse_count_method(std::string_view name);

struct CountResult {
  std::uint64_t p = 0;
  std::uint64_t lambda = 1;
  std::uint64_t projective_count = 0;
  CountMethod method = CountMethod::Brute;
};

inline constexpr std::uint64_t kBruteForceLimit = 101;
inline constexpr std::uint64_t kRingCountLimit = 31;

/// table[a * p + b] = #{x in F_p : x^5 + a x + b = 0}.
std::vector<std::uint8_t> fifth_power_root_table(std::uint64_t p);

/// Affine count N_p^A on the quintic in A^5(F_p), O(p^4) using the root table.
/// The x1 range is split across `jobs` threads.
std::uint64_t affine_count_brute(std::uint64_t p, std::uint64_t lambda, unsigned jobs = 1);

/// N_p = (N_p^A - 1) / (p - 1). Throws TooLarge for p > kBruteForceLimit.
CountResult count_brute(std::uint64_t p, std::uint64_t lambda = 1, unsigned jobs = 1);

using Exponents = std::array<int, 5>;

/// W = {w in [0,d)^5 : sum w = 0 mod d} and representatives of W modulo
/// shifts by multiples of (1,...,1). Each representative is the
/// lexicographically least member of its class.
struct KoblitzData {
  int d = 5;
  std::uint64_t t = 0;                 // (p-1)/d
  std::int64_t generator_exponent = 1;  // T = omega^{generator_exponent}
  std::vector<Exponents> W;
  std::vector<Exponents> classes;
};

KoblitzData koblitz_data(std::uint64_t p, std::int64_t generator_exponent = 1, int d = 5);

/// Sorted-tuple multiset of W with every w_i nonzero.
std::map<Exponents, int> w_star_listing(const KoblitzData& data);
/// Each class counted under its lexicographically least sorted shift.
std::map<Exponents, int> class_listing(const KoblitzData& data);

/// Smallest K with p^K > p^3 + 25 p^2, so the residue pins the integer count.
unsigned count_precision(std::uint64_t p);

/// Koblitz's formula with Gauss sums from Gross-Koblitz, evaluated in R with
/// one guard digit. K = 0 picks count_precision(p).
CountResult count_koblitz(std::uint64_t p, std::uint64_t lambda = 1, unsigned K = 0,
                          std::int64_t generator_exponent = 1);

/// Additive-character route for p != 1 mod 5 (odd p), lambda != 0 mod p:
/// N_p = (p^4-1)/(p-1) + [1 + (1/p) sum_{e=1}^{p-2} g(T^-e)^5 g(T^5e) T^-5e(-5 lambda)] / (p-1).
CountResult count_charsum(std::uint64_t p, std::uint64_t lambda = 1, unsigned K = 0,
                          std::int64_t generator_exponent = 1);

/// c(p) from N_p: p^3+25p^2-100p+1-N (p = 1), p^3+p^2+1-N (p = 4),
/// p^3+p^2+2p+1-N (p = 2, 3 mod 5). Throws PIsFive.
std::int64_t schoen_cp(std::uint64_t p, std::uint64_t n_p);

/// Polynomial with N_p + 4G(1/5,2/5,3/5,4/5) = poly(p) for odd p != 5.
std::int64_t point_count_polynomial(std::uint64_t p);

/// Smallest K with p^K > 2 (p^3 + 25 p^2).
unsigned n_to_g_precision(std::uint64_t p);

/// N_p + 4G = poly(p) mod p^K, N_p by enumeration. K = 0 picks n_to_g_precision(p).
VerificationReport check_n_to_g(std::uint64_t p, unsigned K = 0, unsigned jobs = 1);

/// sum_{y != 0} sum_{x in (F_p^*)^5} theta(y sum x_i^5) = -(p-1) in R, p != 1 mod 5.
VerificationReport check_fifth_power_sum(std::uint64_t p, unsigned K);

/// Generated W* and W/~ listings against the published multiplicities.
VerificationReport check_koblitz_listing();

}  // namespace supercong
