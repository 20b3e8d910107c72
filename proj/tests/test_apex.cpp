#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <skewband/apex.hpp>
#include <skewband/cycle_graph.hpp>

using namespace skewband;

TEST_CASE("shift helpers against hand counts") {
  // q=5 j=2 m=3: anchor (4*2)%5=3; residues (a*2)%5 for a=1..3 are
  // 2,4,1; those <= 3 are {2,1}
  CHECK(peak_shift(5, 2, 3) == 2);
  CHECK(peak_shift(5, 2, 0) == 0);  // empty range
  // r=3 q=5 j=1 m=2: threshold 3; residues a%5 for a=0..2 are 0,1,2
  CHECK(vertex_shift(3, 5, 1, 2) == 3);
  // r=2 q=4 j=3 m=1: threshold (2*3)%4=2; residues 0,3 -> only 0
  CHECK(vertex_shift(2, 4, 3, 1) == 1);
}

TEST_CASE("make_apex validation") {
  CHECK_THROWS_AS(make_apex(4, 2, 8), std::invalid_argument);   // gcd 2
  CHECK_THROWS_AS(make_apex(9, 1, 8), std::invalid_argument);   // q > k
  CHECK_THROWS_AS(make_apex(3, 0, 8), std::invalid_argument);   // j < 1
  CHECK_THROWS_AS(make_apex(3, 4, 8), std::invalid_argument);   // j > q
  Apex a = make_apex(1, 1, 6);
  CHECK(a.eta == 36);
  CHECK(a.f == 6);
}

TEST_CASE("frozen apex tables") {
  LineGraph one = LineGraph::build(1);
  REQUIRE(one.apexes().size() == 1);
  CHECK(one.apexes()[0].q == 1);
  CHECK(one.apexes()[0].j == 1);
  CHECK(one.apexes()[0].eta == 1);
  CHECK(one.apexes()[0].f == 1);

  // k = 6: 12 apexes (sum of phi(1..6)), eta order
  LineGraph six = LineGraph::build(6);
  const std::vector<Apex> want = {
      {6, 1, 1, 1},  {5, 1, 3, 1},  {4, 1, 5, 1},  {3, 1, 8, 2},
      {5, 2, 11, 1}, {2, 1, 15, 3}, {5, 3, 19, 1}, {3, 2, 22, 2},
      {4, 3, 25, 1}, {5, 4, 27, 1}, {6, 5, 29, 1}, {1, 1, 36, 6}};
  REQUIRE(six.apexes().size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(six.apexes()[i].q == want[i].q);
    CHECK(six.apexes()[i].j == want[i].j);
    CHECK(six.apexes()[i].eta == want[i].eta);
    CHECK(six.apexes()[i].f == want[i].f);
  }
}

TEST_CASE("build rejects bad bandwidths") {
  CHECK_THROWS_AS(LineGraph::build(0), std::invalid_argument);
  CHECK_THROWS_AS(LineGraph::build(kTableBandwidthCap + 1), CapExceeded);
}

TEST_CASE("closed form equals the graph over whole periods") {
  for (std::int64_t k = 1; k <= 12; ++k) {
    LineGraph table = LineGraph::build(k);
    CHECK(std::int64_t(table.apexes().size()) ==
          [&] {
            std::vector<std::int64_t> phi = totient_table(k);
            return std::accumulate(phi.begin(), phi.end(), std::int64_t{0});
          }());
    for (std::int64_t n = 0; n <= k * (k + 1); ++n)
      CHECK(table.nullity_at(n) == nullity_by_cycles({mpz_class(n), k}));
  }
}

TEST_CASE("nullity_at boundaries") {
  LineGraph t = LineGraph::build(7);
  CHECK(t.nullity_at(0) == 0);
  CHECK(t.nullity_at(t.period()) == 0);
  CHECK(t.nullity_at(49) == 7);  // the tall apex at k^2
  CHECK_THROWS_AS(t.nullity_at(-1), std::logic_error);
  CHECK_THROWS_AS(t.nullity_at(t.period() + 1), std::logic_error);
  // big n reduces first
  CHECK(t.nullity(mpz_class("10000000000000000000000000049") % 56 + 56 * mpz_class("100")) ==
        t.nullity(mpz_class("10000000000000000000000000049")));
  NullityReport r = t.report(mpz_class(49));
  CHECK(r.method == Method::ClosedForm);
  CHECK(r.nullity == 7);
}

TEST_CASE("from_apexes revalidates") {
  LineGraph good = LineGraph::build(6);
  std::vector<Apex> rows = good.apexes();
  CHECK(LineGraph::from_apexes(6, rows).nullity_at(36) == 6);

  std::vector<Apex> missing(rows.begin(), rows.end() - 1);
  CHECK_THROWS_AS(LineGraph::from_apexes(6, missing), std::logic_error);

  std::vector<Apex> shifted = rows;
  shifted[3].eta += 1;  // breaks the tiling
  CHECK_THROWS_AS(LineGraph::from_apexes(6, shifted), std::logic_error);

  std::vector<Apex> tall = rows;
  tall[1].f = 2;
  CHECK_THROWS_AS(LineGraph::from_apexes(6, tall), std::logic_error);

  std::vector<Apex> bad_pair = rows;
  bad_pair[0].j = 2;  // gcd(2, 6) != 1
  CHECK_THROWS_AS(LineGraph::from_apexes(6, bad_pair), std::logic_error);

  std::vector<Apex> dup = rows;
  dup[2] = dup[1];
  CHECK_THROWS_AS(LineGraph::from_apexes(6, dup), std::logic_error);
}

TEST_CASE("predicted cycles match the decomposition") {
  for (std::int64_t k : {6, 12}) {
    LineGraph table = LineGraph::build(k);
    for (const Apex& a : table.apexes()) {
      CycleDecomposition at_peak = decompose(GraphSpec(mpz_class(a.eta), k));
      for (std::int64_t w = 1; w <= a.f; ++w) {
        const std::int64_t n = a.eta + a.f - w;
        std::vector<std::int64_t> predicted = predicted_cycle(a, w, k);
        REQUIRE(std::int64_t(predicted.size()) == a.q);
        CycleDecomposition d = decompose(GraphSpec(mpz_class(n), k));
        CHECK(std::int64_t(d.cycles.size()) == w);
        // canonicalize: rotate prediction to start at its minimum
        auto lo = std::min_element(predicted.begin(), predicted.end());
        std::rotate(predicted.begin(), lo, predicted.end());
        bool found = false;
        for (const auto& c : d.cycles)
          if (c == predicted) found = true;
        CHECK(found);
        // the same cycle is alive at the peak position too
        bool at_peak_found = false;
        for (const auto& c : at_peak.cycles)
          if (c == predicted) at_peak_found = true;
        CHECK(at_peak_found);
      }
    }
  }
}

TEST_CASE("predicted loop for the full-width peak") {
  Apex a = make_apex(1, 1, 12);
  CHECK(a.eta == 144);
  CHECK(a.f == 12);
  CHECK(predicted_cycle(a, 1, 12) == std::vector<std::int64_t>{11});
  CHECK(predicted_cycle(a, 12, 12) == std::vector<std::int64_t>{0});
}

TEST_CASE("totient sieve") {
  std::vector<std::int64_t> phi = totient_table(12);
  std::vector<std::int64_t> want = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  CHECK(phi == want);
  CHECK_THROWS_AS(totient_table(kSieveBandwidthCap + 1), CapExceeded);
}

TEST_CASE("height counts against brute force") {
  for (std::int64_t k = 1; k <= 25; ++k) {
    std::vector<std::int64_t> brute(k + 1, 0);
    for (std::int64_t n = 1; n <= k * (k + 1); ++n)
      ++brute[nullity_by_cycles({mpz_class(n), k})];
    for (std::int64_t z = 0; z <= k; ++z)
      CHECK(height_count(k, z) == brute[z]);
  }
  for (std::int64_t k : {30, 40}) {
    HeightStats st = make_stats(k);
    CHECK(st.period == k * (k + 1));
    CHECK(std::accumulate(st.counts.begin(), st.counts.end(),
                          std::int64_t{0}) == st.period);
  }
}

TEST_CASE("frozen stats for a wide band") {
  HeightStats st = make_stats(300);
  CHECK(st.counts[0] == 27398);
  CHECK(st.counts[1] == 34256);
  CHECK(st.counts[2] == 9902);
}

TEST_CASE("asymptotic shares") {
  CHECK(asymptotic_share(0) == doctest::Approx(0.3039635509).epsilon(1e-9));
  CHECK(asymptotic_share(1) ==
        doctest::Approx(0.3039635509 * (1.0 + 0.25)).epsilon(1e-9));
  CHECK(asymptotic_share(2) ==
        doctest::Approx(0.3039635509 * (1.0 / 4 + 1.0 / 9)).epsilon(1e-9));
}

TEST_CASE("special-case predictions agree with the graph") {
  for (std::int64_t k = 1; k <= 30; ++k) {
    std::vector<SpecialCasePrediction> preds = special_case_predictions(k);
    CHECK_FALSE(preds.empty());
    for (const SpecialCasePrediction& p : preds) {
      INFO("k=", k, " n=", p.n, " rule=", p.rule);
      CHECK(p.expected == nullity_by_cycles({mpz_class(p.n), k}));
    }
  }
}

TEST_CASE("special cases include the expected families") {
  std::vector<SpecialCasePrediction> preds = special_case_predictions(12);
  std::set<std::string> rules;
  for (const auto& p : preds) rules.insert(p.rule);
  CHECK(rules.count("2k-odd"));
  CHECK(rules.count("2k-even"));
  CHECK(rules.count("3k"));
  // gcd family: n = ck + c - k
  bool saw_gcd = false;
  for (const auto& p : preds)
    if (p.rule.rfind("ck+c-k", 0) == 0) saw_gcd = true;
  CHECK(saw_gcd);
}

TEST_CASE("residue-counting identities") {
  for (std::int64_t q = 1; q <= 25; ++q)
    for (std::int64_t j = 1; j <= q; ++j)
      for (std::int64_t M = 1; M <= q; ++M) {
        CHECK(residue_count_base(q, j, M));
        for (std::int64_t y = j; y <= q; ++y)
          CHECK(residue_count_below(q, j, M, y));
        for (std::int64_t y = 1; y <= j; ++y)
          CHECK(residue_count_above(q, j, M, y));
      }
  CHECK_THROWS_AS(residue_count_below(5, 2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(residue_count_above(5, 2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(residue_count_base(5, 2, 9), std::invalid_argument);
}

TEST_CASE("one-off closed form") {
  CHECK(closed_form_nullity(mpz_class(16), 8) == 2);
  CHECK(closed_form_nullity(mpz_class(16), 4) == 4);
  CHECK(closed_form_nullity(mpz_class("12345678901234567890"), 9) ==
        nullity_by_cycles({mpz_class("12345678901234567890"), 9}));
}
