#include "skewband/exact_rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace skewband {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  if (p % 3 == 0) return p == 3;
  for (std::uint64_t d = 5; d * d <= p; d += 6)
    if (p % d == 0 || p % (d + 2) == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ull << 31))
    throw std::invalid_argument("prime field modulus must fit in 31 bits");
  if (!is_prime_u64(p))
    throw std::invalid_argument("prime field modulus must be prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0)
    throw std::invalid_argument("inverse of zero in prime field");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const mpz_class& v) const {
  // mpz_fdiv_ui floors, so negatives land in [0, p) as well.
  return mpz_fdiv_ui(v.get_mpz_t(), p_);
}

PrimeField smallest_admissible_prime(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  if (k > 46340)
    throw std::invalid_argument(
        "bandwidth too large for a 31-bit admissible prime");
  // Any prime beyond k(k+1) preserves the integer rank of these band
  // matrices; take the first one.
  std::uint64_t c = static_cast<std::uint64_t>(k) * (k + 1) + 1;
  while (!is_prime_u64(c)) ++c;
  return PrimeField(c);
}

RankResult nullity_mod_p(const IntegerMatrix& m, const PrimeField& field) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("rank expects a square matrix");
  const std::int64_t n = m.rows();
  const std::uint64_t p = field.modulus();
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n * n));
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t c = 0; c < n; ++c)
      a[static_cast<std::size_t>(r * n + c)] = field.reduce(m.at(r, c));

  std::int64_t row = 0;
  for (std::int64_t col = 0; col < n && row < n; ++col) {
    std::int64_t piv = -1;
    for (std::int64_t r = row; r < n; ++r) {
      if (a[static_cast<std::size_t>(r * n + col)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row)
      std::swap_ranges(a.begin() + piv * n, a.begin() + (piv + 1) * n,
                       a.begin() + row * n);
    const std::uint64_t pivinv =
        field.inv(a[static_cast<std::size_t>(row * n + col)]);
    for (std::int64_t r = row + 1; r < n; ++r) {
      std::uint64_t lead = a[static_cast<std::size_t>(r * n + col)];
      if (lead == 0) continue;
      // row_r -= (lead / pivot) * row_row, fused as one multiply-add
      const std::uint64_t f = p - field.mul(lead, pivinv);
      for (std::int64_t c = col; c < n; ++c) {
        std::uint64_t& x = a[static_cast<std::size_t>(r * n + c)];
        x = (x + f * a[static_cast<std::size_t>(row * n + c)]) % p;
      }
    }
    ++row;
  }
  return {row, n - row};
}

namespace {

// One elimination step of the fraction-free scheme: every entry stays an
// exact minor of the input, and the division by the previous pivot is
// exact by Sylvester's identity.
void ff_eliminate_below(std::vector<mpz_class>& a, std::int64_t n,
                        std::int64_t row, std::int64_t col,
                        const mpz_class& prev, mpz_class& t1) {
  const std::size_t rw = static_cast<std::size_t>(row * n);
  for (std::int64_t r = row + 1; r < n; ++r) {
    const std::size_t rr = static_cast<std::size_t>(r * n);
    for (std::int64_t c = col + 1; c < n; ++c) {
      mpz_mul(t1.get_mpz_t(), a[rw + col].get_mpz_t(),
              a[rr + c].get_mpz_t());
      mpz_submul(t1.get_mpz_t(), a[rr + col].get_mpz_t(),
                 a[rw + c].get_mpz_t());
      mpz_divexact(a[rr + c].get_mpz_t(), t1.get_mpz_t(),
                   prev.get_mpz_t());
    }
    a[rr + col] = 0;
  }
}

std::vector<mpz_class> copy_entries(const IntegerMatrix& m) {
  const std::int64_t n = m.rows();
  std::vector<mpz_class> a(static_cast<std::size_t>(n * n));
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t c = 0; c < n; ++c)
      a[static_cast<std::size_t>(r * n + c)] = m.at(r, c);
  return a;
}

}  // namespace

RankResult nullity_fraction_free(const IntegerMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("rank expects a square matrix");
  const std::int64_t n = m.rows();
  std::vector<mpz_class> a = copy_entries(m);
  mpz_class prev(1), t1;
  std::int64_t row = 0;
  for (std::int64_t col = 0; col < n && row < n; ++col) {
    std::int64_t piv = -1;
    for (std::int64_t r = row; r < n; ++r) {
      if (a[static_cast<std::size_t>(r * n + col)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;  // dependent column, rank unchanged
    if (piv != row)
      std::swap_ranges(a.begin() + piv * n, a.begin() + (piv + 1) * n,
                       a.begin() + row * n);
    ff_eliminate_below(a, n, row, col, prev, t1);
    prev = a[static_cast<std::size_t>(row * n + col)];
    ++row;
  }
  return {row, n - row};
}

mpz_class fraction_free_determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant expects a square matrix");
  const std::int64_t n = m.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> a = copy_entries(m);
  mpz_class prev(1), t1;
  int sign = 1;
  for (std::int64_t col = 0; col < n; ++col) {
    std::int64_t piv = -1;
    for (std::int64_t r = col; r < n; ++r) {
      if (a[static_cast<std::size_t>(r * n + col)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap_ranges(a.begin() + piv * n, a.begin() + (piv + 1) * n,
                       a.begin() + col * n);
      sign = -sign;
    }
    ff_eliminate_below(a, n, col, col, prev, t1);
    prev = a[static_cast<std::size_t>(col * n + col)];
  }
  // with no skipped columns the last pivot is the full determinant
  return sign < 0 ? mpz_class(-prev) : prev;
}

NullityReport rank_nullity(const BandMatrixSpec& spec, std::int64_t cap,
                           bool fraction_free) {
  IntegerMatrix m = build_integer_matrix(spec, cap);
  RankResult r = fraction_free
                     ? nullity_fraction_free(m)
                     : nullity_mod_p(m, smallest_admissible_prime(spec.k));
  NullityReport rep;
  rep.method = Method::Rank;
  rep.n = spec.n;
  rep.k = spec.k;
  rep.nullity = r.nullity;
  return rep;
}

}  // namespace skewband
