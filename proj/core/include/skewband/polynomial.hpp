#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace skewband {

// Dense univariate polynomial with arbitrary-precision integer
// coefficients, stored low degree first and kept normalized (no trailing
// zero coefficients; the zero polynomial has an empty coefficient vector).
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<mpz_class> coeffs);
  static IntegerPolynomial constant(const mpz_class& c);
  // The monomial x.
  static IntegerPolynomial x();

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  std::int64_t degree() const {
    return static_cast<std::int64_t>(c_.size()) - 1;
  }
  // Coefficient of x^i; zero beyond the degree.
  const mpz_class& coeff(std::int64_t i) const;

  mpz_class evaluate(const mpz_class& x) const;

  // Index of the lowest-order nonzero coefficient.  This is the
  // multiplicity of the root x = 0.  Undefined for the zero polynomial;
  // throws std::domain_error there.
  std::int64_t low_order() const;

  IntegerPolynomial operator-() const;
  IntegerPolynomial operator+(const IntegerPolynomial& o) const;
  IntegerPolynomial operator-(const IntegerPolynomial& o) const;
  IntegerPolynomial operator*(const IntegerPolynomial& o) const;
  bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntegerPolynomial& o) const { return c_ != o.c_; }

  // Human-readable form like "x^4 + 3x^3 - 3x"; "0" for the zero
  // polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace skewband
