#pragma once

// Multiplicative characters of F_p^* as powers of the Teichmüller character,
// with values in Z/p^K. A character is named by its exponent a (chi = omega^a),
// read modulo p-1; a = 0 is the trivial character, and every character
// vanishes at 0.

#include <cstdint>
#include <span>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/gk_ring.hpp"
#include "supercong/report.hpp"

namespace supercong {

using CharExponent = std::int64_t;

/// Discrete-log backed character evaluation at one modulus.
class CharacterTable {
 public:
  explicit CharacterTable(const Modulus& mod);

  const Modulus& modulus() const noexcept { return mod_; }
  std::uint64_t order() const noexcept { return mod_.prime() - 1; }

  /// omega(x)^a as a raw residue in [0, p^K).
  std::uint64_t raw(CharExponent a, std::uint64_t x) const;
  Residue operator()(CharExponent a, std::uint64_t x) const { return Residue::from_raw(mod_, raw(a, x)); }

  /// Values of omega^a at 0 .. p-1.
  std::vector<std::uint64_t> values(CharExponent a) const;

 private:
  Modulus mod_;
  std::vector<std::uint64_t> log_;    // log_[x] w.r.t. a fixed generator, x != 0
  std::vector<std::uint64_t> roots_;  // roots_[k] = omega(generator)^k
};

Residue char_value(CharExponent a, std::uint64_t x, const Modulus& mod);

/// sum over x in F_p of chi(x).
Residue orthogonality_element(CharExponent a, const Modulus& mod);
/// sum over all characters chi of chi(x).
Residue orthogonality_character(std::uint64_t x, const Modulus& mod);

/// Generalized Jacobi sum over t_1 + ... + t_k = 1; k in [2, 4].
Residue jacobi_sum(std::span<const CharExponent> exponents, const Modulus& mod);

/// Jacobi sum against the Gauss-sum quotient in R (exact division by p or by
/// g(chi_1...chi_k)), using Gauss sums from their definition.
VerificationReport jacobi_to_gauss_check(std::span<const CharExponent> exponents, const Modulus& mod);

/// J(chi_1..chi_k) = -chi_k(-1) J(chi_1..chi_{k-1}) when the product is trivial
/// but some chi_i is not.
VerificationReport jacobi_reduction_check(std::span<const CharExponent> exponents, const Modulus& mod);

/// sum_chi chi(-1) J(chi-bar psi^a, chi-bar psi^b, chi psi^c) for the order-5
/// character psi = omega^{(p-1)/5}. Expected value -(p-1).
Residue twisted_jacobi_sum(std::int64_t a, std::int64_t b, std::int64_t c, const Modulus& mod);

/// sum_chi g(chi-bar psi^a) g(chi-bar psi^b) g(chi psi^c) g(chi psi-bar^{a+b+c}),
/// evaluated in R; throws NonIntegralResult unless the sum is a rational
/// integer. Expected value -p(p-1).
Residue twisted_gauss_sum(std::int64_t a, std::int64_t b, std::int64_t c, const Modulus& mod);

/// p * binom(A, B) = B(-1) sum_x A(x) B-bar(1 - x).
Residue greene_binom(CharExponent A, CharExponent B, const Modulus& mod);

/// p^{n+1} times the finite-field hypergeometric function
/// (p/(p-1)) sum_chi binom(A_0 chi, chi) prod_i binom(A_i chi, B_i chi) chi(x).
Residue greene_hypergeom(std::span<const CharExponent> upper, std::span<const CharExponent> lower,
                         std::uint64_t x, const Modulus& mod);

/// g(chi) g(chi-bar) = chi(-1) p for chi != eps, and 1 for eps; chi = omega^{-j}.
VerificationReport check_gauss_pair_product(std::uint64_t j, const GaussSumTable& sums);

/// theta(x) = (1/(p-1)) sum_chi g(chi-bar) chi(x), for x != 0.
VerificationReport check_additive_expansion(std::uint64_t x, const GaussSumTable& sums,
                                            const AdditiveCharacter& theta);

/// True iff a+c and b+c are both nonzero mod 5.
bool twisted_sum_admissible(std::int64_t a, std::int64_t b, std::int64_t c) noexcept;

}  // namespace supercong
