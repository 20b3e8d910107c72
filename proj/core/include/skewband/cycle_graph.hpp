#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "skewband/nullity_report.hpp"
#include "skewband/numeric.hpp"

namespace skewband {

// The graph route is linear in k but needs O(k) memory; refuse outlandish
// bandwidths before trying to allocate.
inline constexpr std::int64_t kGraphBandwidthCap = 100'000'000;

// The functional graph on vertices 0..k attached to a band spec (n, k).
// Its edges depend on n only through n mod k(k+1); the residue is taken
// once here so that astronomically large n costs one bignum division.
struct GraphSpec {
  // Throws std::invalid_argument unless 1 <= k <= kGraphBandwidthCap.
  GraphSpec(const mpz_class& n_in, std::int64_t k_in);

  mpz_class n;
  std::int64_t k = 0;
  std::int64_t period = 0;   // k(k+1)
  std::int64_t residue = 0;  // n mod period, in [0, period)
};

struct Edge {
  std::int64_t from = 0;
  std::int64_t to = 0;
  bool operator==(const Edge& o) const {
    return from == o.from && to == o.to;
  }
};

// The k edges of the graph: the i-th (i = 1..k) runs from
// (i + n - 2) mod (k+1) to (i + n - 1) mod k.  Every vertex has in- and
// out-degree at most 1, so the graph is a union of disjoint cycles plus
// one path.
std::vector<Edge> build_edges(const GraphSpec& spec);

// successor[v] is the edge target out of v, or -1 when v has no
// outgoing edge (exactly one vertex, (n-2) mod (k+1), has none).
std::vector<std::int32_t> successor_map(const GraphSpec& spec);

struct CycleDecomposition {
  // Each cycle is listed starting from its smallest vertex, in walk
  // order; cycles are sorted by that smallest vertex.
  std::vector<std::vector<std::int64_t>> cycles;
  // The path from vertex k (in-degree 0) to the out-degree-0 vertex,
  // including both ends.  Its vertices lie on no cycle.
  std::vector<std::int64_t> tail;
};

CycleDecomposition decompose(const GraphSpec& spec);

// Cycle count without materializing the decomposition; O(k) time and
// O(k) bytes.  This equals the nullity of the matrix at x = 0.
std::int64_t nullity_by_cycles(const GraphSpec& spec);

NullityReport graph_nullity(const GraphSpec& spec);

// All cycles of one graph are vertex translates of each other: cycle B
// is cycle A shifted by +t mod (k+1), elementwise, with walk order
// preserved.  Returns that t in [0, k], or nullopt when no single shift
// works.
std::optional<std::int64_t> translate_offset(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
    std::int64_t k);

enum class EdgeKind { Long, Short };

struct EdgeClass {
  EdgeKind kind = EdgeKind::Short;
  std::int64_t length = 0;  // (to - from) mod (k+1)
};

// Edges split by their target: with r = n mod k, targets <= r - 1 give
// the long step (n mod k - n mod (k+1) + 2) mod (k+1) and targets >= r
// the short one, one less.  classify_edge records kind and measured
// length; the dichotomy itself is checked in the tests.
EdgeClass classify_edge(const Edge& e, const GraphSpec& spec);

}  // namespace skewband
