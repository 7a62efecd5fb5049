#include "supercong/gk_ring.hpp"

#include <sstream>

#include "supercong/padic_gamma.hpp"

namespace supercong {

GKElement::GKElement(const Modulus& mod) : mod_(mod), coeffs_(mod.prime() - 1, 0) {}

GKElement GKElement::constant(const Residue& c) {
  GKElement e(c.modulus());
  e.coeffs_[0] = c.value();
  return e;
}

GKElement GKElement::constant(const Modulus& mod, std::int64_t c) { return constant(Residue(mod, c)); }

GKElement GKElement::pi_power(const Modulus& mod, std::uint64_t k) {
  const std::uint64_t n = mod.prime() - 1;
  GKElement e(mod);
  // pi^k = (-p)^{k div n} pi^{k mod n}
  const std::uint64_t q = k / n;
  std::uint64_t c = mod.pow(mod.prime(), q);
  if (q & 1) c = mod.neg(c);
  e.coeffs_[k % n] = c;
  return e;
}

bool GKElement::is_zero() const noexcept {
  for (std::uint64_t c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool GKElement::is_integral_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::uint64_t GKElement::valuation() const noexcept {
  const std::uint64_t p = mod_.prime();
  const std::uint64_t n = p - 1;
  std::uint64_t best = n * mod_.precision();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::uint64_t c = coeffs_[i];
    if (c == 0) continue;
    std::uint64_t vp = 0;
    while (c % p == 0) {
      c /= p;
      ++vp;
    }
    best = std::min(best, n * vp + i);
  }
  return best;
}

void GKElement::check(const GKElement& o) const {
  if (!(mod_ == o.mod_)) throw Error(ErrorCode::ModulusMismatch, "ring elements from different moduli");
}

GKElement GKElement::operator-() const {
  GKElement r = *this;
  for (auto& c : r.coeffs_) c = mod_.neg(c);
  return r;
}

GKElement& GKElement::operator+=(const GKElement& o) {
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = mod_.add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

GKElement& GKElement::operator-=(const GKElement& o) {
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = mod_.sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

GKElement& GKElement::operator*=(const GKElement& o) { return *this = ring_mul(*this, o); }

GKElement& GKElement::operator*=(const Residue& c) {
  if (!(c.modulus() == mod_)) throw Error(ErrorCode::ModulusMismatch, "scalar from a different modulus");
  for (auto& x : coeffs_) x = mod_.mul(x, c.value());
  return *this;
}

GKElement operator*(const GKElement& a, const GKElement& b) { return ring_mul(a, b); }

GKElement ring_mul(const GKElement& a, const GKElement& b) {
  a.check(b);
  const Modulus& mod = a.mod_;
  const std::size_t n = a.coeffs_.size();
  std::vector<std::uint64_t> full(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      full[i + j] = mod.add(full[i + j], mod.mul(ai, b.coeffs_[j]));
    }
  }
  GKElement r(mod);
  const std::uint64_t minus_p = mod.neg(mod.prime() % mod.value());
  for (std::size_t d = 0; d < n; ++d) r.coeffs_[d] = full[d];
  for (std::size_t d = n; d < full.size(); ++d) {
    r.coeffs_[d - n] = mod.add(r.coeffs_[d - n], mod.mul(minus_p, full[d]));
  }
  return r;
}

GKElement GKElement::pow(std::uint64_t e) const {
  GKElement result = constant(mod_, 1);
  GKElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

GKElement GKElement::divide_by_p() const {
  const std::uint64_t p = mod_.prime();
  if (mod_.precision() < 2) throw Error(ErrorCode::InexactDivision, "no precision left to divide by p");
  GKElement r(mod_.with_precision(mod_.precision() - 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] % p != 0) {
      throw Error(ErrorCode::InexactDivision,
                  "coefficient " + std::to_string(i) + " of " + str() + " not divisible by p");
    }
    r.coeffs_[i] = coeffs_[i] / p;
  }
  return r;
}

GKElement GKElement::divide_by_pi_power(std::uint64_t k) const {
  const std::uint64_t n = mod_.prime() - 1;
  if (k == 0) return *this;
  if (k > n) throw Error(ErrorCode::BadParameters, "divide_by_pi_power expects k <= p-1");
  // pi^{-k} = -pi^{n-k} / p
  return (-(*this * pi_power(mod_, n - k))).divide_by_p();
}

GKElement GKElement::unit_inverse() const {
  const Residue c0 = constant_term();
  if (!c0.is_unit()) throw Error(ErrorCode::NonInvertible, "element is not a unit of R");
  const GKElement one = constant(mod_, 1);
  GKElement y = constant(c0.inverse());
  // Newton: y <- y (1 + e) with e = 1 - u y; the pi-adic valuation of e doubles.
  for (int iter = 0; iter < 128; ++iter) {
    const GKElement e = one - *this * y;
    if (e.is_zero()) return y;
    y *= one + e;
  }
  throw Error(ErrorCode::NoConvergence, "unit inverse did not converge");
}

GKElement GKElement::reduced_to(unsigned precision) const {
  if (precision > mod_.precision()) throw Error(ErrorCode::BadParameters, "cannot raise precision by reduction");
  GKElement r(mod_.with_precision(precision));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] % r.mod_.value();
  return r;
}

GKElement GKElement::lifted_to(unsigned precision) const {
  if (precision < mod_.precision()) return reduced_to(precision);
  GKElement r(mod_.with_precision(precision));
  r.coeffs_ = coeffs_;
  return r;
}

std::string GKElement::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ' ';
    os << coeffs_[i];
  }
  os << ']';
  return os.str();
}

bool operator==(const GKElement& a, const GKElement& b) {
  a.check(b);
  return a.coeffs_ == b.coeffs_;
}

namespace {

// Phi_p(z) and Phi_p'(z) by Horner.
std::pair<GKElement, GKElement> cyclotomic_with_derivative(const GKElement& z) {
  const Modulus& mod = z.modulus();
  const std::uint64_t p = mod.prime();
  GKElement value = GKElement::constant(mod, 1);
  GKElement deriv(mod);
  for (std::uint64_t k = 1; k < p; ++k) {
    deriv = deriv * z + value;
    value = value * z + GKElement::constant(mod, 1);
  }
  return {value, deriv};
}

}  // namespace

GKElement zeta_p(const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (p == 2) throw Error(ErrorCode::BadParameters, "zeta_p requires an odd prime");
  const unsigned target = mod.precision();
  // Each Newton step divides by p twice (unit part of Phi', then pi^v), so
  // work with three guard digits.
  const unsigned work = target + 3;
  const Modulus wmod = mod.with_precision(work);
  GKElement z = GKElement::constant(wmod, 1) + GKElement::pi_power(wmod, 1);

  for (int iter = 0; iter < 64; ++iter) {
    auto [value, deriv] = cyclotomic_with_derivative(z);
    const std::uint64_t v = deriv.valuation();
    if (v >= p - 1) throw Error(ErrorCode::NoConvergence, "derivative of Phi_p lost precision");
    const GKElement unit = deriv.divide_by_pi_power(v);  // precision work-1 (or work if v = 0)
    const GKElement numer = value.reduced_to(unit.modulus().precision()) * unit.unit_inverse();
    const GKElement step = numer.divide_by_pi_power(v);
    const unsigned prec = step.modulus().precision();
    z = (z.reduced_to(prec) - step).lifted_to(work);
    if (step.reduced_to(target).is_zero()) {
      const GKElement zeta = z.reduced_to(target);
      const GKElement phi = cyclotomic_with_derivative(zeta).first;
      const GKElement offset = zeta - GKElement::constant(mod, 1) - GKElement::pi_power(mod, 1);
      if (!phi.is_zero() || offset.valuation() < 2) {
        throw Error(ErrorCode::NoConvergence, "Newton limit is not the expected root of Phi_p");
      }
      return zeta;
    }
  }
  throw Error(ErrorCode::NoConvergence, "Newton iteration for zeta_p did not settle");
}

GKElement gauss_sum_direct(std::uint64_t j, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (p == 2) throw Error(ErrorCode::BadParameters, "Gauss sums in R require an odd prime");
  const std::uint64_t n = p - 1;
  const std::uint64_t e = (n - j % n) % n;
  const GKElement zeta = zeta_p(mod);
  GKElement sum(mod);
  GKElement power = zeta;
  for (std::uint64_t x = 1; x < p; ++x) {
    sum += power * teichmuller(x, mod).pow(e);
    power *= zeta;
  }
  return sum;
}

GKElement gauss_sum_gk(std::uint64_t j, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (p == 2) throw Error(ErrorCode::BadParameters, "Gauss sums in R require an odd prime");
  const std::uint64_t n = p - 1;
  if (j >= n) throw Error(ErrorCode::OutOfRange, "Gross-Koblitz index must lie in [0, p-2]");
  const Residue g = gamma_p(RationalArg(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n)), mod);
  return GKElement::pi_power(mod, j) * (-g);
}

GaussSumTable::GaussSumTable(const Modulus& mod, GaussRoute route) : mod_(mod), route_(route) {
  const std::uint64_t p = mod.prime();
  if (p == 2) throw Error(ErrorCode::BadParameters, "Gauss sums in R require an odd prime");
  const std::uint64_t n = p - 1;
  omega_.reserve(p);
  for (std::uint64_t x = 0; x < p; ++x) omega_.push_back(teichmuller(x, mod));

  sums_.reserve(n);
  if (route == GaussRoute::GrossKoblitz) {
    std::vector<RationalArg> args;
    for (std::uint64_t j = 0; j < n; ++j) {
      args.emplace_back(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n));
    }
    const auto gammas = gamma_p_batch(args, mod);
    for (std::uint64_t j = 0; j < n; ++j) sums_.push_back(GKElement::pi_power(mod, j) * (-gammas[j]));
  } else {
    const AdditiveCharacter theta(mod);
    for (std::uint64_t j = 0; j < n; ++j) {
      const std::uint64_t e = (n - j) % n;
      GKElement sum(mod);
      for (std::uint64_t x = 1; x < p; ++x) sum += theta(static_cast<std::int64_t>(x)) * omega_[x].pow(e);
      sums_.push_back(std::move(sum));
    }
  }
}

const GKElement& GaussSumTable::conj_index(std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(mod_.prime() - 1);
  return sums_[static_cast<std::size_t>(mod_floor(j, n))];
}

Residue GaussSumTable::character(std::int64_t a, std::uint64_t x) const {
  const auto n = static_cast<std::int64_t>(mod_.prime() - 1);
  const std::uint64_t xr = x % mod_.prime();
  if (xr == 0) return Residue(mod_, 0);
  return omega_[xr].pow(static_cast<std::uint64_t>(mod_floor(a, n)));
}

GKElement GaussSumTable::divide_by(const GKElement& x, std::int64_t a) const {
  const auto n = static_cast<std::int64_t>(mod_.prime() - 1);
  if (mod_floor(a, n) == 0) return -x;
  if (!(x.modulus() == mod_)) throw Error(ErrorCode::ModulusMismatch, "dividend at a different precision");
  // 1/g(chi) = chi(-1) g(chi-bar) / p
  return (x * of_character(-a) * character(a, mod_.prime() - 1)).divide_by_p();
}

AdditiveCharacter::AdditiveCharacter(const Modulus& mod) : mod_(mod) {
  const GKElement zeta = zeta_p(mod);
  powers_.reserve(mod.prime());
  powers_.push_back(GKElement::constant(mod, 1));
  for (std::uint64_t x = 1; x < mod.prime(); ++x) powers_.push_back(powers_.back() * zeta);
}

const GKElement& AdditiveCharacter::operator()(std::int64_t x) const {
  return powers_[static_cast<std::size_t>(mod_floor(x, static_cast<std::int64_t>(mod_.prime())))];
}

VerificationReport check_hasse_davenport(std::uint64_t m, std::uint64_t psi_exponent, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  if (m == 0 || (p - 1) % m != 0) {
    throw Error(ErrorCode::OrderNotDividing, std::to_string(m) + " does not divide p-1");
  }
  const GaussSumTable g(mod, GaussRoute::Direct);
  const auto t = static_cast<std::int64_t>((p - 1) / m);
  const auto j = static_cast<std::int64_t>(psi_exponent);
  const auto mm = static_cast<std::int64_t>(m);

  GKElement lhs = GKElement::constant(mod, 1);
  for (std::int64_t i = 0; i < mm; ++i) lhs *= g.conj_index(i * t + j);

  // psi^{-m}(m) = omega(m)^{m j}
  GKElement rhs = g.conj_index(mm * j) * g.character(mm * j, m % p);
  for (std::int64_t i = 1; i < mm; ++i) rhs *= g.conj_index(i * t);

  return compare_elements("hasse-davenport",
                          "m=" + std::to_string(m) + " psi=omega^-" + std::to_string(psi_exponent), lhs, rhs);
}

VerificationReport compare_elements(std::string identity, std::string params, const GKElement& lhs,
                                    const GKElement& rhs) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.prime = lhs.modulus().prime();
  r.modulus = lhs.modulus().value();
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  return r;
}

}  // namespace supercong
