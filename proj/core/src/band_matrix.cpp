#include "skewband/band_matrix.hpp"

#include <stdexcept>
#include <string>

#include "skewband/numeric.hpp"

namespace skewband {

namespace {

void check_spec(const BandMatrixSpec& spec, std::int64_t cap) {
  if (spec.n < 1) throw std::invalid_argument("matrix order must be >= 1");
  if (spec.k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  if (spec.n > cap)
    throw CapExceeded("matrix order " + std::to_string(spec.n) +
                      " exceeds the dense cap " + std::to_string(cap));
}

}  // namespace

IntegerMatrix build_integer_matrix(const BandMatrixSpec& spec,
                                   std::int64_t cap) {
  check_spec(spec, cap);
  IntegerMatrix m(spec.n, spec.n);
  for (std::int64_t r = 0; r < spec.n; ++r) {
    for (std::int64_t c = 0; c < spec.n; ++c) {
      std::int64_t d = c - r;
      if (d > 0 && d <= spec.k)
        m.at(r, c) = 1;
      else if (d < 0 && -d <= spec.k)
        m.at(r, c) = -1;
      // off-band entries are -x, i.e. 0 at x = 0
    }
  }
  return m;
}

PolyMatrix build_poly_matrix(const BandMatrixSpec& spec, std::int64_t cap) {
  check_spec(spec, cap);
  const IntegerPolynomial one = IntegerPolynomial::constant(1);
  const IntegerPolynomial neg_x = -IntegerPolynomial::x();
  PolyMatrix m(spec.n, spec.n);
  for (std::int64_t r = 0; r < spec.n; ++r) {
    for (std::int64_t c = r + 1; c < spec.n; ++c) {
      const IntegerPolynomial& upper = (c - r <= spec.k) ? one : neg_x;
      m.at(r, c) = upper;
      m.at(c, r) = -upper;
    }
  }
  return m;
}

IntegerMatrix evaluate(const PolyMatrix& pm, const mpz_class& x) {
  IntegerMatrix m(pm.rows(), pm.cols());
  for (std::int64_t r = 0; r < pm.rows(); ++r)
    for (std::int64_t c = 0; c < pm.cols(); ++c)
      m.at(r, c) = pm.at(r, c).evaluate(x);
  return m;
}

}  // namespace skewband
