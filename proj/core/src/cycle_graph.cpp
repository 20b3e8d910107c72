#include "skewband/cycle_graph.hpp"

#include <stdexcept>
#include <string>

namespace skewband {

GraphSpec::GraphSpec(const mpz_class& n_in, std::int64_t k_in)
    : n(n_in), k(k_in) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  if (k > kGraphBandwidthCap)
    throw std::invalid_argument("bandwidth " + std::to_string(k) +
                                " exceeds the graph cap " +
                                std::to_string(kGraphBandwidthCap));
  period = k * (k + 1);
  mpz_class p(period), r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  residue = static_cast<std::int64_t>(r.get_si());
}

std::vector<Edge> build_edges(const GraphSpec& spec) {
  const std::int64_t k = spec.k;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k));
  // sources step through residues mod k+1 and targets mod k, one per i;
  // walk both incrementally instead of dividing every time
  std::int64_t from = emod(spec.residue - 1, k + 1);
  std::int64_t to = emod(spec.residue, k);
  for (std::int64_t i = 1; i <= k; ++i) {
    edges.push_back({from, to});
    if (++from == k + 1) from = 0;
    if (++to == k) to = 0;
  }
  return edges;
}

std::vector<std::int32_t> successor_map(const GraphSpec& spec) {
  const std::int64_t k = spec.k;
  std::vector<std::int32_t> succ(static_cast<std::size_t>(k + 1), -1);
  std::int64_t from = emod(spec.residue - 1, k + 1);
  std::int64_t to = emod(spec.residue, k);
  for (std::int64_t i = 1; i <= k; ++i) {
    succ[static_cast<std::size_t>(from)] = static_cast<std::int32_t>(to);
    if (++from == k + 1) from = 0;
    if (++to == k) to = 0;
  }
  return succ;
}

CycleDecomposition decompose(const GraphSpec& spec) {
  const std::int64_t k = spec.k;
  std::vector<std::int32_t> succ = successor_map(spec);
  std::vector<bool> seen(static_cast<std::size_t>(k + 1), false);

  CycleDecomposition out;
  // the tail starts at k, the only vertex with no incoming edge, and
  // ends at the only vertex with no outgoing one
  std::int64_t cur = k;
  for (;;) {
    out.tail.push_back(cur);
    seen[static_cast<std::size_t>(cur)] = true;
    std::int32_t nxt = succ[static_cast<std::size_t>(cur)];
    if (nxt < 0) break;
    cur = nxt;
  }

  // everything off the tail sits on a cycle; scanning vertices upward
  // means each cycle is first entered at its smallest vertex, so the
  // recorded walks are canonical and sorted by construction
  for (std::int64_t v = 0; v <= k; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<std::int64_t> cycle;
    std::int64_t w = v;
    do {
      cycle.push_back(w);
      seen[static_cast<std::size_t>(w)] = true;
      w = succ[static_cast<std::size_t>(w)];
    } while (w != v);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::int64_t nullity_by_cycles(const GraphSpec& spec) {
  const std::int64_t k = spec.k;
  std::vector<std::int32_t> succ = successor_map(spec);
  std::vector<bool> seen(static_cast<std::size_t>(k + 1), false);

  std::int64_t cur = k;
  for (;;) {
    seen[static_cast<std::size_t>(cur)] = true;
    std::int32_t nxt = succ[static_cast<std::size_t>(cur)];
    if (nxt < 0) break;
    cur = nxt;
  }

  std::int64_t cycles = 0;
  for (std::int64_t v = 0; v <= k; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    ++cycles;
    std::int64_t w = v;
    do {
      seen[static_cast<std::size_t>(w)] = true;
      w = succ[static_cast<std::size_t>(w)];
    } while (w != v);
  }
  return cycles;
}

NullityReport graph_nullity(const GraphSpec& spec) {
  NullityReport rep;
  rep.method = Method::Graph;
  rep.n = spec.n;
  rep.k = spec.k;
  rep.nullity = nullity_by_cycles(spec);
  return rep;
}

std::optional<std::int64_t> translate_offset(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
    std::int64_t k) {
  if (a.size() != b.size() || a.empty()) return std::nullopt;
  const std::int64_t mod = k + 1;
  const std::size_t len = a.size();
  // a is in canonical rotation but b's walk may start anywhere relative
  // to it; try every alignment and demand one uniform shift
  for (std::size_t off = 0; off < len; ++off) {
    const std::int64_t t = emod(b[off] - a[0], mod);
    bool ok = true;
    for (std::size_t i = 1; i < len && ok; ++i)
      ok = emod(a[i] + t, mod) == b[(off + i) % len];
    if (ok) return t;
  }
  return std::nullopt;
}

EdgeClass classify_edge(const Edge& e, const GraphSpec& spec) {
  const std::int64_t k = spec.k;
  EdgeClass out;
  out.length = emod(e.to - e.from, k + 1);
  out.kind = e.to <= spec.residue % k - 1 ? EdgeKind::Long : EdgeKind::Short;
  return out;
}

}  // namespace skewband
