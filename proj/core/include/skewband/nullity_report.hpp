#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skewband {

enum class Method { Graph, Rank, ClosedForm };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Graph: return "graph";
    case Method::Rank: return "rank";
    case Method::ClosedForm: return "closed";
  }
  return "?";
}

struct NullityReport {
  Method method = Method::Graph;
  mpz_class n;
  std::int64_t k = 0;
  std::int64_t nullity = 0;
};

}  // namespace skewband
