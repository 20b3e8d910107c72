#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "skewband/band_matrix.hpp"
#include "skewband/polynomial.hpp"

namespace skewband {

// The polynomial family F with F_0 = 1, F_1 = x and
// F_{a+2} = (x + 1) F_{a+1} - F_a.  For wide bands the determinant in x
// of an even-order matrix is the square of one of these.
IntegerPolynomial recurrence_poly(std::int64_t a);

// det A(n, k, x) as an exact integer polynomial, computed from n + 1
// integer determinants (x = 0..n) and Lagrange interpolation over the
// rationals.  The determinant has degree at most n in x, so the nodes
// pin it down; a non-integer interpolated coefficient indicates a bug
// and throws std::logic_error.  Throws CapExceeded when n exceeds cap.
IntegerPolynomial determinant_poly(const BandMatrixSpec& spec,
                                   std::int64_t cap = kDenseDimensionCap,
                                   int threads = 1);

// Multiplicity of the root x = 0, i.e. index of the lowest nonzero
// coefficient.  std::domain_error on the zero polynomial.
std::int64_t vanishing_multiplicity(const IntegerPolynomial& p);

struct ConjectureVerdict {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t multiplicity = 0;
  std::int64_t nullity = 0;
  bool agrees = false;
};

// For even n > k: does the multiplicity of x = 0 in det A(n, k, x)
// equal the nullity of A(n, k)?  (Observed to hold everywhere it has
// been tested; the determinant route is the expensive side.)
ConjectureVerdict check_conjecture(std::int64_t n, std::int64_t k,
                                   std::int64_t cap = kDenseDimensionCap,
                                   int threads = 1);

// Wide-band identity: for 2v - 1 >= k >= v - 1 >= 1 the determinant of
// the order-2v matrix equals F_{2v-k-1} squared.  Returns whether the
// two sides match as polynomials.
bool check_square_identity(std::int64_t v, std::int64_t k,
                           std::int64_t cap = kDenseDimensionCap,
                           int threads = 1);

// In the same wide-band regime the nullity of the order-2v matrix is 2
// when k = 2v + 1 (mod 3) and 0 otherwise.
std::int64_t wide_band_nullity_prediction(std::int64_t v, std::int64_t k);

}  // namespace skewband
