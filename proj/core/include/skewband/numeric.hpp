#pragma once

#include <cstdint>
#include <stdexcept>

namespace skewband {

// Euclidean remainder: result is in [0, m) for any sign of a.  m must be
// positive; the plain % operator would hand back negatives for negative a.
inline std::int64_t emod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Thrown when a request would materialize something larger than the
// configured cap (dense matrices, determinant interpolation, ...).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skewband
