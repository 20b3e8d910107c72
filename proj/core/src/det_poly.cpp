#include "skewband/det_poly.hpp"

#include <stdexcept>
#include <vector>

#include "skewband/cycle_graph.hpp"
#include "skewband/exact_rank.hpp"
#include "skewband/numeric.hpp"
#include "skewband/parallel.hpp"

namespace skewband {

IntegerPolynomial recurrence_poly(std::int64_t a) {
  if (a < 0) throw std::invalid_argument("recurrence index must be >= 0");
  IntegerPolynomial prev = IntegerPolynomial::constant(1);
  if (a == 0) return prev;
  IntegerPolynomial cur = IntegerPolynomial::x();
  const IntegerPolynomial xp1 =
      IntegerPolynomial::x() + IntegerPolynomial::constant(1);
  for (std::int64_t i = 2; i <= a; ++i) {
    IntegerPolynomial next = xp1 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntegerPolynomial determinant_poly(const BandMatrixSpec& spec,
                                   std::int64_t cap, int threads) {
  const PolyMatrix pm = build_poly_matrix(spec, cap);
  const std::int64_t n = spec.n;

  // the determinant has degree <= n, so its values at x = 0..n pin it
  // down exactly
  std::vector<mpz_class> values(static_cast<std::size_t>(n) + 1);
  parallel_for(n + 1, threads, [&](std::int64_t t) {
    values[static_cast<std::size_t>(t)] =
        fraction_free_determinant(evaluate(pm, mpz_class(t)));
  });

  // Newton's divided differences on the unit-spaced nodes, ...
  std::vector<mpq_class> dd(values.begin(), values.end());
  for (std::int64_t level = 1; level <= n; ++level)
    for (std::int64_t i = n; i >= level; --i)
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] -
           dd[static_cast<std::size_t>(i - 1)]) /
          level;

  // ... then Horner expansion of the Newton form into monomials
  std::vector<mpq_class> acc{dd[static_cast<std::size_t>(n)]};
  for (std::int64_t i = n - 1; i >= 0; --i) {
    acc.insert(acc.begin(), dd[static_cast<std::size_t>(i)]);
    for (std::size_t d = 1; d < acc.size(); ++d)
      acc[d - 1] -= mpq_class(i) * acc[d];
  }

  std::vector<mpz_class> coeffs;
  coeffs.reserve(acc.size());
  for (mpq_class& c : acc) {
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::logic_error(
          "determinant interpolation produced a non-integer coefficient");
    coeffs.push_back(c.get_num());
  }
  return IntegerPolynomial(std::move(coeffs));
}

std::int64_t vanishing_multiplicity(const IntegerPolynomial& p) {
  if (p.is_zero())
    throw std::domain_error(
        "vanishing multiplicity of the zero polynomial is undefined");
  return p.low_order();
}

ConjectureVerdict check_conjecture(std::int64_t n, std::int64_t k,
                                   std::int64_t cap, int threads) {
  if (n % 2 != 0)
    throw std::invalid_argument("conjecture check needs an even order");
  if (k < 1 || k >= n)
    throw std::invalid_argument("conjecture check needs 1 <= k < n");
  ConjectureVerdict v;
  v.n = n;
  v.k = k;
  v.multiplicity =
      vanishing_multiplicity(determinant_poly({n, k}, cap, threads));
  v.nullity = nullity_by_cycles(GraphSpec(mpz_class(n), k));
  v.agrees = v.multiplicity == v.nullity;
  return v;
}

namespace {

void check_wide_band(std::int64_t v, std::int64_t k) {
  if (!(v >= 2 && k >= v - 1 && 2 * v - 1 >= k))
    throw std::invalid_argument(
        "wide-band identity needs 2v-1 >= k >= v-1 >= 1");
}

}  // namespace

bool check_square_identity(std::int64_t v, std::int64_t k, std::int64_t cap,
                           int threads) {
  check_wide_band(v, k);
  const IntegerPolynomial d = determinant_poly({2 * v, k}, cap, threads);
  const IntegerPolynomial f = recurrence_poly(2 * v - k - 1);
  return d == f * f;
}

std::int64_t wide_band_nullity_prediction(std::int64_t v, std::int64_t k) {
  check_wide_band(v, k);
  return emod(k - (2 * v + 1), 3) == 0 ? 2 : 0;
}

}  // namespace skewband
