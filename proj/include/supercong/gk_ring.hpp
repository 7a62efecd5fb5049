#pragma once

// Arithmetic in R = (Z/p^K)[pi]/(pi^{p-1} + p), a finite-precision model of
// Z_p[zeta_p]. Elements are dense coefficient vectors in the basis
// 1, pi, ..., pi^{p-2}.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/report.hpp"

namespace supercong {

class GKElement {
 public:
  explicit GKElement(const Modulus& mod);  // zero

  static GKElement constant(const Residue& c);
  static GKElement constant(const Modulus& mod, std::int64_t c);
  /// pi^k reduced by pi^{p-1} = -p.
  static GKElement pi_power(const Modulus& mod, std::uint64_t k);

  const Modulus& modulus() const noexcept { return mod_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Residue coeff(std::size_t i) const { return Residue::from_raw(mod_, coeffs_.at(i)); }
  std::span<const std::uint64_t> raw() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  /// True iff every coefficient of pi^1 .. pi^{p-2} vanishes.
  bool is_integral_rational() const noexcept;
  Residue constant_term() const { return coeff(0); }

  /// pi-adic valuation visible at this precision; (p-1)K for zero.
  std::uint64_t valuation() const noexcept;

  GKElement operator-() const;
  GKElement& operator+=(const GKElement& o);
  GKElement& operator-=(const GKElement& o);
  GKElement& operator*=(const GKElement& o);
  GKElement& operator*=(const Residue& c);
  friend GKElement operator+(GKElement a, const GKElement& b) { return a += b; }
  friend GKElement operator-(GKElement a, const GKElement& b) { return a -= b; }
  friend GKElement operator*(const GKElement& a, const GKElement& b);
  friend GKElement operator*(GKElement a, const Residue& c) { return a *= c; }
  friend GKElement operator*(const Residue& c, GKElement a) { return a *= c; }

  GKElement pow(std::uint64_t e) const;

  /// Exact division by p. Throws InexactDivision if some coefficient is not
  /// divisible by p; the quotient is known one precision step lower.
  GKElement divide_by_p() const;
  /// Exact division by pi^k (k <= p-1), one precision step lower.
  GKElement divide_by_pi_power(std::uint64_t k) const;
  /// Inverse of an element of pi-adic valuation 0.
  GKElement unit_inverse() const;

  GKElement reduced_to(unsigned precision) const;
  /// Same coefficients read in Z/p^{precision} with precision >= current.
  /// The added digits are meaningless until refined.
  GKElement lifted_to(unsigned precision) const;

  std::string str() const;

  friend bool operator==(const GKElement& a, const GKElement& b);
  friend GKElement ring_mul(const GKElement& a, const GKElement& b);

 private:
  void check(const GKElement& o) const;

  Modulus mod_;
  std::vector<std::uint64_t> coeffs_;
};

/// Schoolbook product folded by pi^{p-1} = -p.
GKElement ring_mul(const GKElement& a, const GKElement& b);

/// The root zeta of 1 + z + ... + z^{p-1} with zeta = 1 + pi mod pi^2, by
/// Newton iteration from 1 + pi. Requires odd p.
GKElement zeta_p(const Modulus& mod);

/// g(omega^{-j}) = sum_{x != 0} omega(x)^{-j} zeta^x.
GKElement gauss_sum_direct(std::uint64_t j, const Modulus& mod);

/// Gross-Koblitz value -Gamma_p(j/(p-1)) pi^j.
GKElement gauss_sum_gk(std::uint64_t j, const Modulus& mod);

enum class GaussRoute { Direct, GrossKoblitz };

/// All p-1 Gauss sums g(omega^{-j}) at one modulus, computed once.
class GaussSumTable {
 public:
  GaussSumTable(const Modulus& mod, GaussRoute route);

  const Modulus& modulus() const noexcept { return mod_; }
  GaussRoute route() const noexcept { return route_; }

  /// g(omega^{-j}), j taken mod p-1.
  const GKElement& conj_index(std::int64_t j) const;
  /// g(omega^a), a taken mod p-1.
  const GKElement& of_character(std::int64_t a) const { return conj_index(-a); }

  /// x / g(omega^a) via g(chi) g(chi-bar) = chi(-1) p and g(eps) = -1.
  /// Loses one digit of precision unless a = 0.
  GKElement divide_by(const GKElement& x, std::int64_t a) const;

  /// omega(x)^a as a residue at this modulus (0 for x = 0).
  Residue character(std::int64_t a, std::uint64_t x) const;

 private:
  Modulus mod_;
  GaussRoute route_;
  std::vector<GKElement> sums_;
  std::vector<Residue> omega_;
};

/// Powers zeta^0 .. zeta^{p-1} for additive-character evaluations.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(const Modulus& mod);
  const GKElement& operator()(std::int64_t x) const;  // theta(x) = zeta^x
  const GKElement& zeta() const { return powers_.at(1); }

 private:
  Modulus mod_;
  std::vector<GKElement> powers_;
};

/// Report comparing two ring elements coefficientwise.
VerificationReport compare_elements(std::string identity, std::string params, const GKElement& lhs,
                                    const GKElement& rhs);

/// Hasse-Davenport product relation for chi = omega^{-(p-1)/m} of order m and
/// psi = omega^{-psi_exponent}, with Gauss sums taken from their definition.
VerificationReport check_hasse_davenport(std::uint64_t m, std::uint64_t psi_exponent,
                                         const Modulus& mod);

}  // namespace supercong
