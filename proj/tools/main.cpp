#include <CLI11.hpp>
#include <json.hpp>
#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <skewband/skewband.hpp>

#include "svg_plot.hpp"

namespace sb = skewband;
using ordered_json = nlohmann::ordered_json;

namespace {

// 0 = success, 1 = verified mismatch/disagreement, 2 = operational error
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

std::string fixed(double v, int decimals) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v,
                               std::chars_format::fixed, decimals);
  (void)ec;
  return std::string(buf, p);
}

double fixed_value(double v, int decimals) {
  return std::stod(fixed(v, decimals));
}

bool parse_big(const std::string& s, mpz_class* out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t p = i; p < s.size(); ++p)
    if (s[p] < '0' || s[p] > '9') return false;
  *out = mpz_class(s, 10);
  return true;
}

// stdout by default, a file when --out is given
struct Sink {
  std::ofstream file;
  std::ostream* os = nullptr;
  bool open(const std::string& path) {
    if (path.empty()) {
      os = &std::cout;
      return true;
    }
    file.open(path, std::ios::trunc);
    if (!file.is_open()) return false;
    os = &file;
    return true;
  }
};

struct GlobalOpts {
  std::string cache_dir = ".cache";
  int threads = sb::default_thread_count();
};

sb::LineGraph cached_table(const GlobalOpts& g, std::int64_t k) {
  std::string reason;
  sb::LineGraph lg = sb::load_or_build_line_graph(g.cache_dir, k, &reason);
  if (!reason.empty())
    std::cerr << "warning: apex cache rebuilt (" << reason << ")\n";
  return lg;
}

// ---------------------------------------------------------------- nullity

struct NullityOpts {
  std::string n_str;
  std::int64_t k = 0;
  std::string method = "all";
  std::string format = "plain";
  bool decomposition = false;
  std::int64_t cap = sb::kDenseDimensionCap;
  std::string out;
};

int cmd_nullity(const GlobalOpts& g, const NullityOpts& o) {
  mpz_class n;
  if (!parse_big(o.n_str, &n)) {
    std::cerr << "error: --n must be a decimal integer\n";
    return kExitError;
  }
  const bool all = o.method == "all";
  const bool want_graph = all || o.method == "graph";
  const bool want_rank = all || o.method == "rank";
  const bool want_closed = all || o.method == "closed";
  if (o.decomposition && !want_graph) {
    std::cerr << "error: --decomposition needs the graph method\n";
    return kExitError;
  }

  std::vector<std::pair<std::string, std::int64_t>> results;
  std::optional<sb::CycleDecomposition> dec;
  const mpz_class period = mpz_class(o.k) * (o.k + 1);
  mpz_class residue;
  mpz_fdiv_r(residue.get_mpz_t(), n.get_mpz_t(), period.get_mpz_t());

  if (want_graph) {
    sb::GraphSpec gs(n, o.k);
    results.emplace_back("graph", sb::nullity_by_cycles(gs));
    if (o.decomposition) dec = sb::decompose(gs);
  }
  if (want_rank) {
    if (!mpz_fits_slong_p(n.get_mpz_t()) || n < 1 || n > o.cap)
      throw sb::CapExceeded(
          "rank method materializes a dense matrix; needs 1 <= n <= " +
          std::to_string(o.cap));
    sb::BandMatrixSpec spec{static_cast<std::int64_t>(n.get_si()), o.k};
    results.emplace_back("rank", sb::rank_nullity(spec, o.cap).nullity);
  }
  if (want_closed)
    results.emplace_back("closed", cached_table(g, o.k).nullity(n));

  bool match = true;
  for (const auto& r : results) match = match && r.second == results[0].second;

  Sink sink;
  if (!sink.open(o.out)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kExitError;
  }
  std::ostream& os = *sink.os;

  if (o.format == "json") {
    ordered_json j;
    j["schema"] = "skewband.nullity/1";
    j["n"] = n.get_str();
    j["k"] = o.k;
    j["period"] = period.get_str();
    j["residue"] = residue.get_str();
    ordered_json rows = ordered_json::array();
    for (const auto& r : results)
      rows.push_back({{"method", r.first}, {"nullity", r.second}});
    j["results"] = std::move(rows);
    j["match"] = match;
    if (dec) {
      ordered_json d;
      d["cycles"] = dec->cycles;
      d["tail"] = dec->tail;
      j["decomposition"] = std::move(d);
    }
    os << j.dump(2) << "\n";
  } else {  // plain
    if (results.size() == 1 && !dec) {
      os << results[0].second << "\n";
    } else {
      for (const auto& r : results) os << r.first << " " << r.second << "\n";
      if (results.size() > 1) os << (match ? "MATCH" : "MISMATCH") << "\n";
      if (dec) {
        os << "cycles " << dec->cycles.size() << "\n";
        for (const auto& c : dec->cycles) {
          os << "cycle";
          for (std::int64_t v : c) os << " " << v;
          os << "\n";
        }
        os << "tail";
        for (std::int64_t v : dec->tail) os << " " << v;
        os << "\n";
      }
    }
  }
  return match ? 0 : kExitMismatch;
}

// -------------------------------------------------------------- linegraph

struct LinegraphOpts {
  std::int64_t k = 0;
  std::optional<std::int64_t> from, to;
  std::string format = "csv";
  std::string out;
  double scale = 12.0;
};

int cmd_linegraph(const GlobalOpts& g, const LinegraphOpts& o) {
  sb::LineGraph lg = cached_table(g, o.k);
  const std::int64_t from = o.from.value_or(0);
  const std::int64_t to = o.to.value_or(lg.period());
  if (from > to) {
    std::cerr << "error: --from must not exceed --to\n";
    return kExitError;
  }
  if (to - from >= 10'000'000) {
    std::cerr << "error: range wider than 1e7 points; narrow it\n";
    return kExitError;
  }
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t n = from; n <= to; ++n)
    values.push_back(lg.nullity_at(sb::emod(n, lg.period())));

  Sink sink;
  if (!sink.open(o.out)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kExitError;
  }
  std::ostream& os = *sink.os;

  if (o.format == "csv") {
    os << "n,nullity\n";
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(values.size()); ++i)
      os << from + i << "," << values[static_cast<std::size_t>(i)] << "\n";
  } else if (o.format == "json") {
    ordered_json j;
    j["schema"] = "skewband.linegraph/1";
    j["k"] = o.k;
    j["from"] = from;
    j["to"] = to;
    ordered_json pts = ordered_json::array();
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(values.size()); ++i)
      pts.push_back({from + i, values[static_cast<std::size_t>(i)]});
    j["points"] = std::move(pts);
    os << j.dump(2) << "\n";
  } else if (o.format == "svg") {
    skewband_cli::write_line_graph_svg(os, from, values, o.k, o.scale);
  } else {  // plain
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(values.size()); ++i)
      os << from + i << " " << values[static_cast<std::size_t>(i)] << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- apexes

struct ApexesOpts {
  std::int64_t k = 0;
  std::string format = "csv";
  std::string out;
};

int cmd_apexes(const GlobalOpts& g, const ApexesOpts& o) {
  sb::LineGraph lg = cached_table(g, o.k);
  Sink sink;
  if (!sink.open(o.out)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kExitError;
  }
  std::ostream& os = *sink.os;

  if (o.format == "csv") {
    os << "q,j,eta,f\n";
    for (const sb::Apex& a : lg.apexes())
      os << a.q << "," << a.j << "," << a.eta << "," << a.f << "\n";
  } else if (o.format == "json") {
    ordered_json j;
    j["schema"] = "skewband.apexes/1";
    j["k"] = o.k;
    j["period"] = std::to_string(lg.period());
    ordered_json rows = ordered_json::array();
    for (const sb::Apex& a : lg.apexes())
      rows.push_back({{"q", a.q},
                      {"j", a.j},
                      {"eta", std::to_string(a.eta)},
                      {"f", a.f}});
    j["apexes"] = std::move(rows);
    os << j.dump(2) << "\n";
  } else {  // plain
    for (const sb::Apex& a : lg.apexes())
      os << "q=" << a.q << " j=" << a.j << " eta=" << a.eta << " f=" << a.f
         << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ stats

struct StatsOpts {
  std::int64_t k = 0;
  std::int64_t zmax = 10;
  std::string format = "csv";
  std::string out;
};

int cmd_stats(const GlobalOpts&, const StatsOpts& o) {
  sb::HeightStats st = sb::make_stats(o.k);
  const std::int64_t zhi = std::min(o.zmax, o.k);

  Sink sink;
  if (!sink.open(o.out)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kExitError;
  }
  std::ostream& os = *sink.os;

  auto percent_of = [&](std::int64_t z) {
    return 100.0 * static_cast<double>(st.counts[static_cast<std::size_t>(z)]) /
           static_cast<double>(st.period);
  };
  // both columns in percent so the empirical and limiting shares read
  // side by side
  auto asymptotic_of = [](std::int64_t z) {
    return 100.0 * sb::asymptotic_share(z);
  };

  if (o.format == "csv") {
    os << "z,count,percent,asymptotic\n";
    for (std::int64_t z = 0; z <= zhi; ++z)
      os << z << "," << st.counts[static_cast<std::size_t>(z)] << ","
         << fixed(percent_of(z), 4) << "," << fixed(asymptotic_of(z), 4)
         << "\n";
  } else if (o.format == "json") {
    ordered_json j;
    j["schema"] = "skewband.stats/1";
    j["k"] = o.k;
    j["period"] = std::to_string(st.period);
    ordered_json rows = ordered_json::array();
    for (std::int64_t z = 0; z <= zhi; ++z)
      rows.push_back({{"z", z},
                      {"count", st.counts[static_cast<std::size_t>(z)]},
                      {"percent", fixed_value(percent_of(z), 4)},
                      {"asymptotic", fixed_value(asymptotic_of(z), 4)}});
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
  } else {  // plain
    for (std::int64_t z = 0; z <= zhi; ++z)
      os << "z=" << z << " count=" << st.counts[static_cast<std::size_t>(z)]
         << " percent=" << fixed(percent_of(z), 4)
         << " asymptotic=" << fixed(asymptotic_of(z), 4) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyOpts {
  std::int64_t kmax = 0;
  std::string mode = "methods";
  std::uint64_t seed = 12345;
  std::int64_t samples = 1000;
  std::int64_t cap = sb::kDenseDimensionCap;
};

struct FailureLog {
  std::int64_t count = 0;
  std::vector<std::string> first;
  void add(std::string what) {
    ++count;
    if (first.size() < 10) first.push_back(std::move(what));
  }
  void dump(std::ostream& os) const {
    for (const std::string& s : first) os << "  FAIL " << s << "\n";
    if (count > static_cast<std::int64_t>(first.size()))
      os << "  ... and " << count - static_cast<std::int64_t>(first.size())
         << " more\n";
  }
};

int verify_methods(const GlobalOpts& g, const VerifyOpts& o) {
  FailureLog log;
  for (std::int64_t k = 1; k <= o.kmax; ++k) {
    sb::LineGraph lg = sb::LineGraph::build(k);  // fresh, never the cache
    const std::int64_t period = lg.period();
    for (std::int64_t n = 0; n <= period; ++n) {
      const std::int64_t via_graph =
          sb::nullity_by_cycles(sb::GraphSpec(mpz_class(n), k));
      const std::int64_t via_closed = lg.nullity_at(n);
      if (via_graph != via_closed)
        log.add("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                ": graph=" + std::to_string(via_graph) +
                " closed=" + std::to_string(via_closed));
    }
    const std::int64_t nhi = std::min(period, o.cap);
    const std::int64_t count = nhi - k;
    std::vector<std::string> errs(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    sb::parallel_for(count, g.threads, [&](std::int64_t i) {
      const std::int64_t n = k + 1 + i;
      const sb::BandMatrixSpec spec{n, k};
      const sb::IntegerMatrix m = sb::build_integer_matrix(spec, o.cap);
      const std::int64_t expect =
          sb::nullity_by_cycles(sb::GraphSpec(mpz_class(n), k));
      const std::int64_t modp =
          sb::nullity_mod_p(m, sb::smallest_admissible_prime(k)).nullity;
      const std::int64_t exact = sb::nullity_fraction_free(m).nullity;
      if (modp != expect || exact != expect)
        errs[static_cast<std::size_t>(i)] =
            "k=" + std::to_string(k) + " n=" + std::to_string(n) +
            ": graph=" + std::to_string(expect) +
            " modp=" + std::to_string(modp) +
            " exact=" + std::to_string(exact);
    });
    for (const std::string& e : errs)
      if (!e.empty()) log.add(e);
    std::cout << "k=" << k << " period=" << period
              << ": graph==closed on [0," << period << "]"
              << ", rank==graph on (" << k << "," << nhi << "]\n";
  }
  std::cout << (log.count == 0 ? "PASS" : "FAIL") << " methods k<=" << o.kmax
            << "\n";
  log.dump(std::cout);
  return log.count == 0 ? 0 : kExitMismatch;
}

int verify_special_cases(const GlobalOpts&, const VerifyOpts& o) {
  FailureLog log;
  for (std::int64_t k = 1; k <= o.kmax; ++k) {
    const auto preds = sb::special_case_predictions(k);
    for (const sb::SpecialCasePrediction& p : preds) {
      const std::int64_t actual =
          sb::nullity_by_cycles(sb::GraphSpec(mpz_class(p.n), k));
      if (actual != p.expected)
        log.add("k=" + std::to_string(k) + " n=" + std::to_string(p.n) +
                " rule=" + p.rule + ": expected=" +
                std::to_string(p.expected) + " graph=" +
                std::to_string(actual));
    }
    std::cout << "k=" << k << ": " << preds.size() << " predictions\n";
  }
  std::cout << (log.count == 0 ? "PASS" : "FAIL") << " special-cases k<="
            << o.kmax << "\n";
  log.dump(std::cout);
  return log.count == 0 ? 0 : kExitMismatch;
}

int verify_lemmas(const GlobalOpts&, const VerifyOpts& o) {
  FailureLog log;
  std::mt19937_64 rng(o.seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  // residue-counting identities, brute force against closed form
  for (std::int64_t s = 0; s < o.samples; ++s) {
    const std::int64_t q = uniform(1, 200);
    const std::int64_t j = uniform(1, q);
    const std::int64_t M = uniform(1, q);
    if (!sb::residue_count_below(q, j, M, uniform(j, q)))
      log.add("count-below q=" + std::to_string(q) + " j=" +
              std::to_string(j) + " M=" + std::to_string(M));
    if (!sb::residue_count_above(q, j, M, uniform(1, j)))
      log.add("count-above q=" + std::to_string(q) + " j=" +
              std::to_string(j) + " M=" + std::to_string(M));
    if (!sb::residue_count_base(q, j, M))
      log.add("count-base q=" + std::to_string(q) + " j=" +
              std::to_string(j) + " M=" + std::to_string(M));
  }
  std::cout << "counting identities: " << 3 * o.samples << " tuples\n";

  // unit steps and symmetry of the line graph, exhaustive per k
  for (std::int64_t k = 1; k <= o.kmax; ++k) {
    sb::LineGraph lg = sb::LineGraph::build(k);
    const std::int64_t period = lg.period();
    std::int64_t prev = lg.nullity_at(0);
    if (prev != 0) log.add("k=" + std::to_string(k) + ": nonzero at n=0");
    for (std::int64_t n = 1; n <= period; ++n) {
      const std::int64_t cur = lg.nullity_at(n);
      if (cur - prev != 1 && prev - cur != 1)
        log.add("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                ": step is not a unit");
      prev = cur;
    }
    for (std::int64_t n = 0; n <= period; ++n) {
      const std::int64_t mirror = sb::emod(k * k - k - n, period);
      if (lg.nullity_at(n) != lg.nullity_at(mirror))
        log.add("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                ": symmetry breach");
    }
    if (lg.nullity_at(sb::emod(k * k, period)) != k)
      log.add("k=" + std::to_string(k) + ": peak at k^2 missing");
  }
  std::cout << "unit steps and symmetry: k<=" << o.kmax << " exhaustive\n";

  // cycle structure on random graphs: equal lengths, uniform translates
  for (std::int64_t s = 0; s < o.samples; ++s) {
    const std::int64_t k = uniform(1, 300);
    const std::int64_t n = uniform(0, k * (k + 1) - 1);
    const sb::GraphSpec gs(mpz_class(n), k);
    const sb::CycleDecomposition dec = sb::decompose(gs);
    for (std::size_t i = 1; i < dec.cycles.size(); ++i) {
      if (dec.cycles[i].size() != dec.cycles[0].size()) {
        log.add("translate k=" + std::to_string(k) + " n=" +
                std::to_string(n) + ": unequal cycle lengths");
        break;
      }
      if (!sb::translate_offset(dec.cycles[0], dec.cycles[i], k)) {
        log.add("translate k=" + std::to_string(k) + " n=" +
                std::to_string(n) + ": cycle " + std::to_string(i) +
                " is not a translate");
        break;
      }
    }
  }
  std::cout << "cycle translates: " << o.samples << " random graphs\n";

  // two edge lengths only, split by target
  for (std::int64_t s = 0; s < o.samples / 2; ++s) {
    const std::int64_t k = uniform(2, 300);
    const std::int64_t n = uniform(0, k * (k + 1) - 1);
    const sb::GraphSpec gs(mpz_class(n), k);
    const std::int64_t nk = gs.residue % k;
    const std::int64_t nk1 = gs.residue % (k + 1);
    const std::int64_t len_long = sb::emod(nk - nk1 + 2, k + 1);
    const std::int64_t len_short = sb::emod(nk - nk1 + 1, k + 1);
    for (const sb::Edge& e : sb::build_edges(gs)) {
      const sb::EdgeClass c = sb::classify_edge(e, gs);
      const std::int64_t want =
          c.kind == sb::EdgeKind::Long ? len_long : len_short;
      if (c.length != want) {
        log.add("edges k=" + std::to_string(k) + " n=" + std::to_string(n) +
                ": edge " + std::to_string(e.from) + "->" +
                std::to_string(e.to) + " length " +
                std::to_string(c.length) + " != " + std::to_string(want));
        break;
      }
    }
  }
  std::cout << "edge dichotomy: " << o.samples / 2 << " random graphs\n";

  std::cout << (log.count == 0 ? "PASS" : "FAIL") << " lemmas (seed="
            << o.seed << ", samples=" << o.samples << ")\n";
  log.dump(std::cout);
  return log.count == 0 ? 0 : kExitMismatch;
}

int cmd_verify(const GlobalOpts& g, const VerifyOpts& o) {
  if (o.mode == "methods") return verify_methods(g, o);
  if (o.mode == "special-cases") return verify_special_cases(g, o);
  return verify_lemmas(g, o);
}

// ------------------------------------------------------------- conjecture

struct ConjectureOpts {
  std::int64_t nmax = 60;
  std::string format = "csv";
  std::string out;
  std::int64_t cap = sb::kDenseDimensionCap;
};

int cmd_conjecture(const GlobalOpts& g, const ConjectureOpts& o) {
  Sink sink;
  if (!sink.open(o.out)) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kExitError;
  }
  std::ostream& os = *sink.os;

  std::vector<sb::ConjectureVerdict> rows;
  for (std::int64_t n = 2; n <= o.nmax; n += 2)
    for (std::int64_t k = 1; k < n; ++k)
      rows.push_back(sb::check_conjecture(n, k, o.cap, g.threads));
  bool all = true;
  for (const auto& r : rows) all = all && r.agrees;

  if (o.format == "csv") {
    os << "n,k,multiplicity,nullity,agrees\n";
    for (const auto& r : rows)
      os << r.n << "," << r.k << "," << r.multiplicity << "," << r.nullity
         << "," << (r.agrees ? "true" : "false") << "\n";
  } else if (o.format == "json") {
    ordered_json j;
    j["schema"] = "skewband.conjecture/1";
    j["n_max"] = o.nmax;
    ordered_json jr = ordered_json::array();
    for (const auto& r : rows)
      jr.push_back({{"n", r.n},
                    {"k", r.k},
                    {"multiplicity", r.multiplicity},
                    {"nullity", r.nullity},
                    {"agrees", r.agrees}});
    j["rows"] = std::move(jr);
    j["all_agree"] = all;
    os << j.dump(2) << "\n";
  } else {  // plain
    for (const auto& r : rows)
      os << "n=" << r.n << " k=" << r.k << " multiplicity=" << r.multiplicity
         << " nullity=" << r.nullity << " "
         << (r.agrees ? "agree" : "DISAGREE") << "\n";
    os << (all ? "ALL AGREE" : "DISAGREEMENT FOUND") << " (" << rows.size()
       << " pairs)\n";
  }
  return all ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nullity toolkit for skew-symmetric Toeplitz band matrices"};
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOpts g;
  app.add_option("--cache-dir", g.cache_dir, "apex table cache directory")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for dense sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  int rc = 0;

  NullityOpts no;
  auto* c_nullity = app.add_subcommand(
      "nullity", "nullity at one order, by any of the three methods");
  c_nullity->add_option("--n", no.n_str, "matrix order (any size, decimal)")
      ->required();
  c_nullity->add_option("--k", no.k, "bandwidth")
      ->required()
      ->check(CLI::PositiveNumber);
  c_nullity->add_option("--method", no.method, "graph|rank|closed|all")
      ->check(CLI::IsMember({"graph", "rank", "closed", "all"}))
      ->capture_default_str();
  c_nullity->add_option("--format", no.format, "plain|json")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();
  c_nullity->add_flag("--decomposition", no.decomposition,
                      "also report cycles and tail (graph method)");
  c_nullity->add_option("--cap", no.cap, "dense materialization cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_nullity->add_option("--out", no.out, "write to file instead of stdout");
  c_nullity->callback([&] { rc = cmd_nullity(g, no); });

  LinegraphOpts lo;
  auto* c_linegraph = app.add_subcommand(
      "linegraph", "nullity as a function of the order, over a range");
  c_linegraph->add_option("--k", lo.k, "bandwidth")
      ->required()
      ->check(CLI::PositiveNumber);
  c_linegraph->add_option("--from", lo.from, "range start (default 0)");
  c_linegraph->add_option("--to", lo.to,
                          "range end, inclusive (default one period)");
  c_linegraph->add_option("--format", lo.format, "csv|json|svg|plain")
      ->check(CLI::IsMember({"csv", "json", "svg", "plain"}))
      ->capture_default_str();
  c_linegraph->add_option("--scale", lo.scale, "svg pixels per unit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_linegraph->add_option("--out", lo.out, "write to file instead of stdout");
  c_linegraph->callback([&] { rc = cmd_linegraph(g, lo); });

  ApexesOpts ao;
  auto* c_apexes =
      app.add_subcommand("apexes", "apex table of the nullity line graph");
  c_apexes->add_option("--k", ao.k, "bandwidth")
      ->required()
      ->check(CLI::PositiveNumber);
  c_apexes->add_option("--format", ao.format, "csv|json|plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}))
      ->capture_default_str();
  c_apexes->add_option("--out", ao.out, "write to file instead of stdout");
  c_apexes->callback([&] { rc = cmd_apexes(g, ao); });

  StatsOpts so;
  auto* c_stats = app.add_subcommand(
      "stats", "how often each nullity value occurs over one period");
  c_stats->add_option("--k", so.k, "bandwidth")
      ->required()
      ->check(CLI::PositiveNumber);
  c_stats->add_option("--z-max", so.zmax, "largest nullity value to list")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c_stats->add_option("--format", so.format, "csv|json|plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}))
      ->capture_default_str();
  c_stats->add_option("--out", so.out, "write to file instead of stdout");
  c_stats->callback([&] { rc = cmd_stats(g, so); });

  VerifyOpts vo;
  auto* c_verify = app.add_subcommand(
      "verify", "cross-check the implementations against each other");
  c_verify->add_option("--k-max", vo.kmax, "verify bandwidths 1..k-max")
      ->required()
      ->check(CLI::PositiveNumber);
  c_verify->add_option("--mode", vo.mode, "methods|special-cases|lemmas")
      ->check(CLI::IsMember({"methods", "special-cases", "lemmas"}))
      ->capture_default_str();
  c_verify->add_option("--seed", vo.seed, "random seed for sampled checks")
      ->capture_default_str();
  c_verify->add_option("--samples", vo.samples, "samples per sampled check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_verify->add_option("--cap", vo.cap, "dense materialization cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_verify->callback([&] { rc = cmd_verify(g, vo); });

  ConjectureOpts co;
  auto* c_conjecture = app.add_subcommand(
      "conjecture",
      "vanishing order of the determinant vs nullity, even orders");
  c_conjecture->add_option("--n-max", co.nmax, "largest (even) order to test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_conjecture->add_option("--format", co.format, "csv|json|plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}))
      ->capture_default_str();
  c_conjecture->add_option("--cap", co.cap, "dense materialization cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_conjecture->add_option("--out", co.out,
                           "write to file instead of stdout");
  c_conjecture->callback([&] { rc = cmd_conjecture(g, co); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return rc;
}
