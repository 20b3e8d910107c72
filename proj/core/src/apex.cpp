#include "skewband/apex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "skewband/numeric.hpp"

namespace skewband {

namespace {

std::string rule_label(const char* fmt, std::int64_t a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, static_cast<long long>(a));
  return buf;
}

std::string rule_label(const char* fmt, std::int64_t a, std::int64_t b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, static_cast<long long>(a),
                static_cast<long long>(b));
  return buf;
}

}  // namespace

std::int64_t peak_shift(std::int64_t q, std::int64_t j, std::int64_t m) {
  if (q < 1 || j < 1 || j > q || m < 0 || m >= q)
    throw std::invalid_argument("peak_shift: need 1<=j<=q and 0<=m<q");
  const std::int64_t anchor = (m + 1) * j % q;
  std::int64_t count = 0;
  std::int64_t r = j % q;
  for (std::int64_t a = 1; a <= m; ++a) {
    if (r <= anchor) ++count;
    r += j;
    if (r >= q) r -= q;
  }
  return count;
}

std::int64_t vertex_shift(std::int64_t r, std::int64_t q, std::int64_t j,
                          std::int64_t m) {
  if (q < 2 || r < 1 || r >= q || j < 1 || j > q || m < 0 || m >= q)
    throw std::invalid_argument(
        "vertex_shift: need q>=2, 1<=r<q, 1<=j<=q, 0<=m<q");
  const std::int64_t threshold = r * j % q;
  std::int64_t count = 0;
  std::int64_t res = 0;
  for (std::int64_t a = 0; a <= m; ++a) {
    if (res < threshold) ++count;
    res += j;
    if (res >= q) res -= q;
  }
  return count;
}

Apex make_apex(std::int64_t q, std::int64_t j, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  if (q < 1 || q > k || j < 1 || j > q)
    throw std::invalid_argument("apex pair needs 1 <= j <= q <= k");
  if (std::gcd(j, q) != 1)
    throw std::invalid_argument("apex pair must be coprime");
  const std::int64_t f = k / q;
  const std::int64_t m = k % q;
  Apex a;
  a.q = q;
  a.j = j;
  a.f = f;
  a.eta = k * ((k + 1) * j / q) - k + ((m + 1) * j % q) * f +
          peak_shift(q, j, m);
  if (a.eta < f || a.eta > k * (k + 1) - f)
    throw std::logic_error("apex position fell outside its period");
  return a;
}

std::vector<std::int64_t> predicted_cycle(const Apex& apex, std::int64_t w,
                                          std::int64_t k) {
  if (w < 1 || w > apex.f)
    throw std::invalid_argument("cycle height must be in [1, f]");
  if (apex.q == 1) return {k - w};
  const std::int64_t m = k % apex.q;
  std::vector<std::int64_t> cycle;
  cycle.reserve(static_cast<std::size_t>(apex.q));
  cycle.push_back(k - w);
  for (std::int64_t r = 1; r < apex.q; ++r) {
    cycle.push_back(-1 - w + (r * apex.j % apex.q) * apex.f +
                    vertex_shift(r, apex.q, apex.j, m));
  }
  return cycle;
}

std::vector<std::int64_t> totient_table(std::int64_t limit) {
  if (limit < 0) throw std::invalid_argument("totient limit must be >= 0");
  if (limit > kSieveBandwidthCap)
    throw CapExceeded("totient sieve limit exceeds the cap");
  std::vector<std::int64_t> phi(static_cast<std::size_t>(limit) + 1);
  std::iota(phi.begin(), phi.end(), std::int64_t{0});
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (phi[static_cast<std::size_t>(i)] != i) continue;  // i composite
    for (std::int64_t v = i; v <= limit; v += i)
      phi[static_cast<std::size_t>(v)] -=
          phi[static_cast<std::size_t>(v)] / i;
  }
  return phi;
}

LineGraph::LineGraph(std::int64_t k, std::vector<Apex> apexes)
    : k_(k), period_(k * (k + 1)), apexes_(std::move(apexes)) {}

LineGraph LineGraph::build(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  if (k > kTableBandwidthCap)
    throw CapExceeded("bandwidth exceeds the closed-form table cap");
  std::vector<Apex> apexes;
  for (std::int64_t q = 1; q <= k; ++q)
    for (std::int64_t j = 1; j <= q; ++j)
      if (std::gcd(j, q) == 1) apexes.push_back(make_apex(q, j, k));
  std::sort(apexes.begin(), apexes.end(),
            [](const Apex& a, const Apex& b) { return a.eta < b.eta; });
  LineGraph lg(k, std::move(apexes));
  lg.validate();
  return lg;
}

LineGraph LineGraph::from_apexes(std::int64_t k, std::vector<Apex> apexes) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  std::sort(apexes.begin(), apexes.end(),
            [](const Apex& a, const Apex& b) { return a.eta < b.eta; });
  LineGraph lg(k, std::move(apexes));
  lg.validate();
  return lg;
}

void LineGraph::validate() const {
  if (apexes_.empty()) throw std::logic_error("apex table is empty");
  std::int64_t expected = 0;
  for (std::int64_t phi : totient_table(k_)) expected += phi;
  if (static_cast<std::int64_t>(apexes_.size()) != expected)
    throw std::logic_error("apex table has the wrong cardinality");
  const Apex& first = apexes_.front();
  const Apex& last = apexes_.back();
  if (first.eta - first.f != 0)
    throw std::logic_error("leftmost triangle must start at 0");
  if (last.eta + last.f != period_)
    throw std::logic_error("rightmost triangle must end at the period");
  for (std::size_t i = 0; i < apexes_.size(); ++i) {
    const Apex& a = apexes_[i];
    if (a.q < 1 || a.q > k_ || a.j < 1 || a.j > a.q ||
        std::gcd(a.j, a.q) != 1)
      throw std::logic_error("apex indices out of range");
    if (a.f != k_ / a.q)
      throw std::logic_error("apex height disagrees with its order");
    if (i + 1 < apexes_.size()) {
      const Apex& b = apexes_[i + 1];
      if (a.eta >= b.eta)
        throw std::logic_error("apex positions must be strictly increasing");
      // adjacent triangles must share a valley vertex: no gaps, no
      // overlaps, so the bases tile the whole period
      if (a.eta + a.f != b.eta - b.f)
        throw std::logic_error("apex triangles do not tile the period");
    }
  }
}

std::int64_t LineGraph::nullity_at(std::int64_t r) const {
  if (r < 0 || r > period_)
    throw std::invalid_argument("residue outside [0, period]");
  auto it = std::partition_point(
      apexes_.begin(), apexes_.end(),
      [r](const Apex& a) { return a.eta + a.f < r; });
  if (it == apexes_.end())
    throw std::logic_error("no triangle covers the residue");
  const std::int64_t v = it->f - std::llabs(r - it->eta);
  if (v < 0) throw std::logic_error("triangle lookup underflowed");
  return v;
}

std::int64_t LineGraph::nullity(const mpz_class& n) const {
  mpz_class p(period_), r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return nullity_at(static_cast<std::int64_t>(r.get_si()));
}

NullityReport LineGraph::report(const mpz_class& n) const {
  NullityReport rep;
  rep.method = Method::ClosedForm;
  rep.n = n;
  rep.k = k_;
  rep.nullity = nullity(n);
  return rep;
}

std::int64_t closed_form_nullity(const mpz_class& n, std::int64_t k) {
  return LineGraph::build(k).nullity(n);
}

namespace {

// prefix sums of the totient up to k, queried at k/z style points
struct TotientPrefix {
  explicit TotientPrefix(std::int64_t k) : sums(totient_table(k)) {
    for (std::size_t i = 1; i < sums.size(); ++i) sums[i] += sums[i - 1];
  }
  std::int64_t upto(std::int64_t x) const {
    return x <= 0 ? 0 : sums[static_cast<std::size_t>(x)];
  }
  std::vector<std::int64_t> sums;
};

std::int64_t height_count_from(const TotientPrefix& pre, std::int64_t k,
                               std::int64_t z) {
  if (z == 0) return pre.upto(k);
  return pre.upto(k / z) + pre.upto(k / (z + 1));
}

}  // namespace

std::int64_t height_count(std::int64_t k, std::int64_t z) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  if (z < 0) throw std::invalid_argument("height must be >= 0");
  if (z > k) return 0;
  TotientPrefix pre(k);
  return height_count_from(pre, k, z);
}

HeightStats make_stats(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  TotientPrefix pre(k);
  HeightStats st;
  st.k = k;
  st.period = k * (k + 1);
  st.counts.reserve(static_cast<std::size_t>(k) + 1);
  std::int64_t total = 0;
  for (std::int64_t z = 0; z <= k; ++z) {
    std::int64_t c = height_count_from(pre, k, z);
    st.counts.push_back(c);
    total += c;
  }
  if (total != st.period)
    throw std::logic_error("height counts fail to cover the period");
  return st;
}

double asymptotic_share(std::int64_t z) {
  if (z < 0) throw std::invalid_argument("height must be >= 0");
  const double base = 3.0 / (std::numbers::pi * std::numbers::pi);
  if (z == 0) return base;
  const double zd = static_cast<double>(z);
  return base * (1.0 / (zd * zd) + 1.0 / ((zd + 1.0) * (zd + 1.0)));
}

std::vector<SpecialCasePrediction> special_case_predictions(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("bandwidth must be >= 1");
  std::vector<SpecialCasePrediction> out;
  auto add = [&out](std::int64_t n, std::int64_t expected, std::string rule) {
    out.push_back({n, expected, std::move(rule)});
  };

  // odd offsets below twice the bandwidth always give nullity 1
  for (std::int64_t t = -1; t <= k - 1; t += 2) add(2 * k - t, 1, "2k-odd");
  // even offsets give 2 exactly when the offset is k+1 (mod 3)
  for (std::int64_t e = -2; e <= k - 1; e += 2)
    add(2 * k - e, emod(e - (k + 1), 3) == 0 ? 2 : 0, "2k-even");

  add(2 * k + 3, k % 3 == 0 ? 3 : 1, "2k+3");
  add(2 * k + 4, k % 3 == 0 ? 2 : 0, "2k+4");
  add(2 * k + 5, 1, "2k+5");
  if (k > 2) add(2 * k + 6, k % 3 == 1 ? 2 : 0, "2k+6");

  // around multiples tk of the bandwidth, when t+1 divides k+1
  for (std::int64_t t = 2; t + 1 <= k + 1; ++t) {
    if ((k + 1) % (t + 1) != 0) continue;
    for (std::int64_t i = 0; i <= t; ++i) {
      add(t * k + i, t - i, rule_label("tk+i t=%lld i=%lld", t, i));
      if (i > 0)
        add(t * k - i, t - i, rule_label("tk-i t=%lld i=%lld", t, i));
    }
  }

  // gcd family at n = ck + c - k for 1 < c < k
  for (std::int64_t c = 2; c <= k - 1; ++c)
    add(c * k + c - k, std::gcd(c, k), rule_label("ck+c-k c=%lld", c));

  if (k % 2 == 0)
    add(3 * k, 0, "3k");
  else
    add(3 * k, k % 4 == 1 ? 1 : 3, "3k");

  // progression family: with k = a (mod b), 0 <= a <= b, the nullity at
  // (k+1+a-b)(k-a)/b is (k-a)/b
  for (std::int64_t b = 1; b <= k; ++b) {
    for (std::int64_t a : {k % b, (k % b == 0) ? b : std::int64_t{-1}}) {
      if (a < 0) continue;
      add((k + 1 + a - b) * (k - a) / b, (k - a) / b,
          rule_label("progression a=%lld b=%lld", a, b));
    }
  }

  // even orders in the wide-band regime
  for (std::int64_t v = std::max<std::int64_t>(2, (k + 2) / 2); v <= k + 1;
       ++v)
    add(2 * v, emod(k - (2 * v + 1), 3) == 0 ? 2 : 0,
        rule_label("wide-even v=%lld", v));

  return out;
}

namespace {

std::int64_t brute_window(std::int64_t q, std::int64_t j, std::int64_t M,
                          std::int64_t lo, std::int64_t hi) {
  // residues (a*j) mod q for a = 0..M-1 landing in [lo, hi)
  std::int64_t count = 0;
  std::int64_t r = 0;
  for (std::int64_t a = 0; a < M; ++a) {
    if (r >= lo && r < hi) ++count;
    r += j;
    if (r >= q) r -= q;
  }
  return count;
}

void check_identity_args(std::int64_t q, std::int64_t j, std::int64_t M) {
  if (q < 1 || j < 1 || j > q || M < 1 || M > q)
    throw std::invalid_argument("identity check needs 1<=j<=q, 1<=M<=q");
}

}  // namespace

bool residue_count_below(std::int64_t q, std::int64_t j, std::int64_t M,
                         std::int64_t y) {
  check_identity_args(q, j, M);
  if (y < j || y > q)
    throw std::invalid_argument("window below needs y in [j, q]");
  const std::int64_t closed = M * j / q + (y <= M * j % q ? 1 : 0);
  return brute_window(q, j, M, y - j, y) == closed;
}

bool residue_count_above(std::int64_t q, std::int64_t j, std::int64_t M,
                         std::int64_t y) {
  check_identity_args(q, j, M);
  if (y < 1 || y > j)
    throw std::invalid_argument("window above needs y in [1, j]");
  const std::int64_t closed = M - M * j / q - (y <= M * j % q ? 1 : 0);
  return brute_window(q, j, M, y, y + q - j) == closed;
}

bool residue_count_base(std::int64_t q, std::int64_t j, std::int64_t M) {
  check_identity_args(q, j, M);
  const std::int64_t closed = M - M * j / q;
  return brute_window(q, j, M, 0, q - j) == closed;
}

}  // namespace skewband
