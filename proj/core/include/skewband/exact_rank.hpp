#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "skewband/band_matrix.hpp"
#include "skewband/nullity_report.hpp"

namespace skewband {

bool is_prime_u64(std::uint64_t p);

// Arithmetic in Z/p for prime p.  Elements are canonical residues in
// [0, p).  p must stay below 2^31 so that products fit comfortably in
// 64 bits during elimination.
class PrimeField {
 public:
  // Throws std::invalid_argument when p is not a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return a * b % p_;
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  // Inverse of a nonzero element, via Fermat.
  std::uint64_t inv(std::uint64_t a) const;
  // Canonical residue of an arbitrary-precision integer.
  std::uint64_t reduce(const mpz_class& v) const;

 private:
  std::uint64_t p_;
};

// Smallest prime exceeding k(k+1).  Ranks of the integer matrices here
// are preserved exactly under reduction mod any such prime, so one
// elimination over this field gives the true rank.
PrimeField smallest_admissible_prime(std::int64_t k);

struct RankResult {
  std::int64_t rank = 0;
  std::int64_t nullity = 0;
};

// Gaussian elimination over Z/p.  The matrix must be square.
RankResult nullity_mod_p(const IntegerMatrix& m, const PrimeField& field);

// Fraction-free (integer-preserving) elimination over Z; slower but
// involves no choice of prime.  The matrix must be square.
RankResult nullity_fraction_free(const IntegerMatrix& m);

// Determinant by the same fraction-free scheme, with row pivoting.
mpz_class fraction_free_determinant(const IntegerMatrix& m);

// Builds the matrix at x = 0 and reports its nullity.  By default the
// rank is computed mod the smallest admissible prime for k, with the
// fraction-free route available for cross-checks.
NullityReport rank_nullity(const BandMatrixSpec& spec,
                           std::int64_t cap = kDenseDimensionCap,
                           bool fraction_free = false);

}  // namespace skewband
