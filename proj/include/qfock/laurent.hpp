#ifndef QFOCK_LAURENT_HPP
#define QFOCK_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "qfock/partition.hpp"

namespace qfock {

/// A Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(const mpz_class& c, int exponent);
  static LaurentPoly q_power(int exponent) { return monomial(1, exponent); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, mpz_class>& terms() const noexcept { return terms_; }
  mpz_class coeff(int exponent) const;
  /// Lowest / highest exponent; throws std::logic_error on zero.
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  /// The bar involution q -> q^-1.
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }
  /// Exact division; throws std::domain_error if the divisor does not divide.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;
  /// All exponents strictly positive (zero counts).
  bool in_q_zq() const;
  mpz_class eval_at_one() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int exponent, const mpz_class& c);
  std::map<int, mpz_class> terms_;
};

/// q_i: q for i = 0, q^4 for i = n, q^2 otherwise.
LaurentPoly q_of_residue(int i, const HParams& p);
/// Exponent e with q_i = q^e.
int q_exponent_of_residue(int i, const HParams& p);

/// [k]_v with v = q^e: (v^k - v^-k) / (v - v^-1).
LaurentPoly quantum_integer(int k, int e);
/// [k]_v!
LaurentPoly quantum_factorial(int k, int e);

/// The unique bar-invariant polynomial agreeing with f in degrees <= 0.
LaurentPoly symmetric_correction(const LaurentPoly& f);

/// Canonical text: terms in ascending degree, e.g. "q^-2 + 1 + 2*q^3", "-q",
/// "0" for zero.
std::string to_string(const LaurentPoly& f);
/// Inverse of to_string; also tolerant of whitespace, "q^1", "+" signs and
/// repeated degrees.  Throws std::invalid_argument.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace qfock

#endif  // QFOCK_LAURENT_HPP
