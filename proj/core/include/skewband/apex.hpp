#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "skewband/nullity_report.hpp"

namespace skewband {

// Building the closed-form table costs roughly the cube of the
// bandwidth; beyond this it is cheaper to walk the graph per query.
inline constexpr std::int64_t kTableBandwidthCap = 10'000;
// Totient sieves and height tallies are O(k) memory.
inline constexpr std::int64_t kSieveBandwidthCap = 100'000'000;

// One local maximum of the nullity-versus-n line graph for a fixed
// bandwidth k.  The graph is piecewise linear with slope +-1, so each
// peak (eta, f) owns the triangle of base [eta - f, eta + f]; the peaks
// are indexed by coprime pairs (j, q) with 1 <= j <= q <= k.
struct Apex {
  std::int64_t q = 0;
  std::int64_t j = 0;
  std::int64_t eta = 0;  // position of the peak, in [0, k(k+1)]
  std::int64_t f = 0;    // its height, equal to floor(k/q)
};

// Count of a in [1, k mod q] whose residue (a*j) mod q does not exceed
// ((k mod q + 1)*j) mod q.  One of the two correction terms that place a
// peak exactly.
std::int64_t peak_shift(std::int64_t q, std::int64_t j, std::int64_t m);

// Count of a in [0, m] with (a*j) mod q strictly below (r*j) mod q; the
// per-vertex correction used when predicting cycle membership.
// Requires 1 <= r <= q - 1.
std::int64_t vertex_shift(std::int64_t r, std::int64_t q, std::int64_t j,
                          std::int64_t m);

// The peak for a coprime pair (j, q), 1 <= j <= q <= k, gcd(j, q) = 1.
Apex make_apex(std::int64_t q, std::int64_t j, std::int64_t k);

// For heights w = 1..f of an apex, one cycle of the graph at
// n = eta + f - w predicted in closed form: q vertices in walk order
// starting from k - w.  For q = 1 this is the loop {k - w}.  The graph
// there has w cycles in all; the others are translates of this one.
// The same cycle also survives at the peak position itself, so the f
// predictions taken together enumerate every cycle of the graph at
// n = eta.
std::vector<std::int64_t> predicted_cycle(const Apex& apex, std::int64_t w,
                                          std::int64_t k);

// Euler totients 0..limit by sieve; phi[0] = 0.
std::vector<std::int64_t> totient_table(std::int64_t limit);

// The full nullity line graph for bandwidth k over one period
// [0, k(k+1)], represented by its apexes.  Construction and loading both
// recheck the structural invariants: sum-of-totients many apexes, all
// distinct, triangles tiling the period exactly.
class LineGraph {
 public:
  // Enumerates every coprime pair.  Throws std::invalid_argument for
  // k < 1 and CapExceeded beyond kTableBandwidthCap.
  static LineGraph build(std::int64_t k);
  // Adopts an externally produced apex list (cache load); sorts it and
  // runs the same validation, throwing std::logic_error on any breach.
  static LineGraph from_apexes(std::int64_t k, std::vector<Apex> apexes);

  std::int64_t k() const { return k_; }
  std::int64_t period() const { return period_; }
  const std::vector<Apex>& apexes() const { return apexes_; }

  // Nullity at residue r in [0, period], by locating the triangle
  // containing r.  O(log #apexes).
  std::int64_t nullity_at(std::int64_t r) const;
  // Nullity for arbitrary n, reduced mod the period first.
  std::int64_t nullity(const mpz_class& n) const;
  NullityReport report(const mpz_class& n) const;

 private:
  LineGraph(std::int64_t k, std::vector<Apex> apexes);
  void validate() const;

  std::int64_t k_ = 0;
  std::int64_t period_ = 0;
  std::vector<Apex> apexes_;  // sorted by eta
};

// One-off closed-form nullity.  Builds the whole table; callers with
// many queries for one k should hold a LineGraph instead.
std::int64_t closed_form_nullity(const mpz_class& n, std::int64_t k);

// Number of residues in [1, k(k+1)] at which the line graph has height
// exactly z (z >= 0).  Closed form via totient sums.
std::int64_t height_count(std::int64_t k, std::int64_t z);

// Limiting fraction of residues with height z as k grows.
double asymptotic_share(std::int64_t z);

struct HeightStats {
  std::int64_t k = 0;
  std::int64_t period = 0;
  // counts[z] for z = 0..k; sums to the period.
  std::vector<std::int64_t> counts;
};

// All height counts for one k with a single sieve pass.
HeightStats make_stats(std::int64_t k);

// A closed-form special-case prediction: the nullity at one particular
// n, valid for the bandwidth it was generated for.
struct SpecialCasePrediction {
  std::int64_t n = 0;
  std::int64_t expected = 0;
  std::string rule;  // short label of the generating family
};

// Every special-case family instantiated for bandwidth k, guards
// applied.  n values may repeat across families; predictions must then
// agree with each other (and with the graph), which the tests assert.
std::vector<SpecialCasePrediction> special_case_predictions(std::int64_t k);

// The residue-counting identities the peak formulas rest on.  Each
// compares a brute-force count of a in [0, M-1] whose residue
// (a*j) mod q falls in a half-open window against the closed form, and
// returns whether they agree; the verification suites sweep these over
// random tuples.  Preconditions: 1 <= j <= q, 1 <= M <= q, and y in
// [j, q] for the window below y, y in [1, j] for the window above.
bool residue_count_below(std::int64_t q, std::int64_t j, std::int64_t M,
                         std::int64_t y);  // window [y-j, y)
bool residue_count_above(std::int64_t q, std::int64_t j, std::int64_t M,
                         std::int64_t y);  // window [y, y+q-j)
bool residue_count_base(std::int64_t q, std::int64_t j,
                        std::int64_t M);   // window [0, q-j)

}  // namespace skewband
