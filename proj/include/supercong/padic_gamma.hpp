#pragma once

// Morita's p-adic gamma function at p-integral rationals, modulo p^K.

#include <cstdint>
#include <span>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/report.hpp"

namespace supercong {

/// (-1)^n * prod_{0<j<n, p not dividing j} j, with the empty product at n = 0 giving 1.
Residue gamma_p_int(std::uint64_t n, const Modulus& mod);

/// Gamma_p(x) mod p^K. Gamma_p is 1-Lipschitz, so it is evaluated at the
/// integer lift of x in [0, p^K).
Residue gamma_p(const RationalArg& x, const Modulus& mod);

/// Elementwise gamma_p over one ascending sweep of [1, max lift]. Cost is
/// governed by the largest lift, not by the number of arguments.
std::vector<Residue> gamma_p_batch(std::span<const RationalArg> xs, const Modulus& mod);

/// Checks the Gauss multiplication formula
///   prod_{h<m} Gamma_p((x+h)/m) = omega(m)^r Gamma_p(x) prod_{0<h<m} Gamma_p(h/m)
/// for x = r/(p-1), 0 <= r <= p-1. The Teichmüller factor omega(m^{(1-x)(1-p)})
/// has integer exponent r-(p-1), which only matters mod p-1.
VerificationReport check_mult_formula(std::uint64_t m, const RationalArg& x, const Modulus& mod);

}  // namespace supercong
