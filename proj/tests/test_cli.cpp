#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <skewband/apex.hpp>
#include <skewband/apex_cache.hpp>
#include <skewband/numeric.hpp>

// SKEWBAND_CLI_PATH is injected by the build
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(SKEWBAND_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("skewband-cli-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string cache_arg() const { return "--cache-dir " + path.string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string::npos) end = s.size();
    lines.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("cli: three methods agree and say so") {
  TempDir dir;
  RunResult r = run_cli("nullity --n 16 --k 8 " + dir.cache_arg());
  CHECK(r.rc == 0);
  CHECK(r.out == "graph 2\nrank 2\nclosed 2\nMATCH\n");
}

TEST_CASE("cli: single method prints the bare value") {
  TempDir dir;
  RunResult r =
      run_cli("nullity --n 16 --k 4 --method rank " + dir.cache_arg());
  CHECK(r.rc == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("cli: decomposition in plain form") {
  TempDir dir;
  RunResult r = run_cli("nullity --n 16 --k 8 --method graph --decomposition " +
                        dir.cache_arg());
  CHECK(r.rc == 0);
  CHECK(r.out ==
        "graph 2\ncycles 2\ncycle 0 3 6\ncycle 1 4 7\ntail 8 2 5\n");
}

TEST_CASE("cli: decomposition needs the graph method") {
  TempDir dir;
  RunResult r = run_cli(
      "nullity --n 16 --k 8 --method closed --decomposition " +
      dir.cache_arg());
  CHECK(r.rc == 2);
}

TEST_CASE("cli: json report carries big integers as strings") {
  TempDir dir;
  RunResult r = run_cli(
      "nullity --n 16 --k 8 --method graph --decomposition --format json " +
      dir.cache_arg());
  CHECK(r.rc == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "skewband.nullity/1");
  CHECK(j["n"] == "16");
  CHECK(j["k"] == 8);
  CHECK(j["period"] == "72");
  CHECK(j["residue"] == "16");
  CHECK(j["match"] == true);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["method"] == "graph");
  CHECK(j["results"][0]["nullity"] == 2);
  CHECK(j["decomposition"]["cycles"] ==
        nlohmann::json::parse("[[0,3,6],[1,4,7]]"));
  CHECK(j["decomposition"]["tail"] == nlohmann::json::parse("[8,2,5]"));
}

TEST_CASE("cli: graph and closed agree on a 300-digit order") {
  TempDir dir;
  const std::string n(300, '7');
  RunResult g =
      run_cli("nullity --n " + n + " --k 9 --method graph " + dir.cache_arg());
  RunResult c =
      run_cli("nullity --n " + n + " --k 9 --method closed " + dir.cache_arg());
  CHECK(g.rc == 0);
  CHECK(c.rc == 0);
  CHECK(g.out == c.out);
  CHECK_FALSE(g.out.empty());
}

TEST_CASE("cli: rank refuses to materialize past the cap") {
  TempDir dir;
  RunResult r =
      run_cli("nullity --n 100000 --k 3 --method rank " + dir.cache_arg());
  CHECK(r.rc == 2);
}

TEST_CASE("cli: malformed order is an operational error") {
  TempDir dir;
  RunResult r = run_cli("nullity --n 12x34 --k 3 " + dir.cache_arg());
  CHECK(r.rc == 2);
}

TEST_CASE("cli: parse errors use CLI exit codes") {
  TempDir dir;
  CHECK(run_cli("nullity --k 3 " + dir.cache_arg()).rc > 2);  // --n missing
  CHECK(run_cli("nullity --n 4 --k 3 --method bogus " + dir.cache_arg()).rc >
        2);
  CHECK(run_cli(dir.cache_arg()).rc > 2);  // subcommand required
}

TEST_CASE("cli: linegraph csv over one period") {
  TempDir dir;
  RunResult r = run_cli("linegraph --k 6 " + dir.cache_arg());
  CHECK(r.rc == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 44);  // header + n = 0..42
  CHECK(lines[0] == "n,nullity");
  CHECK(lines[1] == "0,0");
  CHECK(lines[37] == "36,6");
  CHECK(lines[43] == "42,0");
}

TEST_CASE("cli: linegraph plain rows") {
  TempDir dir;
  RunResult r = run_cli("linegraph --k 1 --format plain " + dir.cache_arg());
  CHECK(r.rc == 0);
  CHECK(r.out == "0 0\n1 1\n2 0\n");
}

TEST_CASE("cli: linegraph wraps negative orders into the period") {
  TempDir dir;
  RunResult r = run_cli("linegraph --k 6 --from=-2 --to=2 --format plain " +
                        dir.cache_arg());
  CHECK(r.rc == 0);
  skewband::LineGraph lg = skewband::LineGraph::build(6);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  for (std::int64_t i = 0; i < 5; ++i) {
    const std::int64_t n = -2 + i;
    const std::int64_t v = lg.nullity_at(skewband::emod(n, 42));
    CHECK(lines[static_cast<std::size_t>(i)] ==
          std::to_string(n) + " " + std::to_string(v));
  }
}

TEST_CASE("cli: linegraph range validation") {
  TempDir dir;
  CHECK(run_cli("linegraph --k 3 --from 5 --to 2 " + dir.cache_arg()).rc == 2);
  CHECK(run_cli("linegraph --k 3 --from 0 --to 20000000 " + dir.cache_arg())
            .rc == 2);
}

TEST_CASE("cli: linegraph json points") {
  TempDir dir;
  RunResult r = run_cli("linegraph --k 6 --format json " + dir.cache_arg());
  CHECK(r.rc == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "skewband.linegraph/1");
  CHECK(j["k"] == 6);
  CHECK(j["from"] == 0);
  CHECK(j["to"] == 42);
  REQUIRE(j["points"].size() == 43);
  CHECK(j["points"][36] == nlohmann::json::parse("[36,6]"));
}

TEST_CASE("cli: svg plot positions invert to the data") {
  TempDir dir;
  RunResult r = run_cli(
      "linegraph --k 6 --from=30 --to=42 --format svg --scale 10 " +
      dir.cache_arg());
  CHECK(r.rc == 0);
  CHECK(r.out.find("<svg") == 0);

  skewband::LineGraph lg = skewband::LineGraph::build(6);
  std::int64_t ymax = 1;
  std::vector<std::int64_t> want;
  for (std::int64_t n = 30; n <= 42; ++n) {
    want.push_back(lg.nullity_at(n));
    ymax = std::max(ymax, want.back());
  }

  // pull the polyline apart and undo the affine map
  const std::size_t at = r.out.find("points=\"");
  REQUIRE(at != std::string::npos);
  const std::size_t end = r.out.find('"', at + 8);
  std::vector<std::string> pts;
  {
    std::string body = r.out.substr(at + 8, end - at - 8);
    std::size_t start = 0;
    while (start < body.size()) {
      std::size_t sp = body.find(' ', start);
      if (sp == std::string::npos) sp = body.size();
      pts.push_back(body.substr(start, sp - start));
      start = sp + 1;
    }
  }
  REQUIRE(pts.size() == want.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::size_t comma = pts[i].find(',');
    const double x = std::stod(pts[i].substr(0, comma));
    const double y = std::stod(pts[i].substr(comma + 1));
    CHECK(x == doctest::Approx(40.0 + static_cast<double>(i) * 10.0));
    const double v = static_cast<double>(ymax) - (y - 15.0) / 10.0;
    CHECK(v == doctest::Approx(static_cast<double>(want[i])));
  }

  // the peak at n = 36 earns a highlighted dot at the top margin
  CHECK(r.out.find("<circle cx=\"100.00\" cy=\"15.00\" r=\"2.2\" "
                   "fill=\"#b3001b\"/>") != std::string::npos);
  // and the zero at n = 30 a plain one on the axis
  CHECK(r.out.find("<circle cx=\"40.00\" cy=\"75.00\" r=\"2.2\" "
                   "fill=\"#1446a0\"/>") != std::string::npos);
}

TEST_CASE("cli: apex table output") {
  TempDir dir;
  RunResult r = run_cli("apexes --k 6 " + dir.cache_arg());
  CHECK(r.rc == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "q,j,eta,f");
  CHECK(lines[1] == "6,1,1,1");
  CHECK(lines[12] == "1,1,36,6");

  RunResult wide = run_cli("apexes --k 50 " + dir.cache_arg());
  CHECK(wide.rc == 0);
  CHECK(wide.out.find("11,4,878,4\n") != std::string::npos);

  RunResult j = run_cli("apexes --k 6 --format json " + dir.cache_arg());
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "skewband.apexes/1");
  CHECK(doc["period"] == "42");
  REQUIRE(doc["apexes"].size() == 12);
  CHECK(doc["apexes"][11]["eta"] == "36");  // string, not number

  RunResult plain = run_cli("apexes --k 6 --format plain " + dir.cache_arg());
  CHECK(plain.out.find("q=1 j=1 eta=36 f=6\n") != std::string::npos);
}

TEST_CASE("cli: apexes populates and survives a corrupted cache") {
  TempDir dir;
  RunResult first = run_cli("apexes --k 6 " + dir.cache_arg());
  CHECK(first.rc == 0);
  fs::path cached = skewband::apex_cache_path(dir.path, 6);
  REQUIRE(fs::exists(cached));

  std::ofstream(cached) << "{ mangled";
  RunResult second = run_cli("apexes --k 6 " + dir.cache_arg());
  CHECK(second.rc == 0);
  CHECK(second.out == first.out);
  // and the rewrite left the cache healthy again
  std::ifstream in(cached);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  REQUIRE_FALSE(doc.is_discarded());
  CHECK(doc["schema"] == "skewband.apex-table/1");
}

TEST_CASE("cli: stats empirical vs limiting shares") {
  TempDir dir;
  RunResult r = run_cli("stats --k 300 --z-max 2 " + dir.cache_arg());
  CHECK(r.rc == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "z,count,percent,asymptotic");
  CHECK(lines[1] == "0,27398,30.3411,30.3964");
  CHECK(lines[2] == "1,34256,37.9358,37.9954");
  CHECK(lines[3] == "2,9902,10.9657,10.9765");

  RunResult j = run_cli("stats --k 300 --z-max 1 --format json " +
                        dir.cache_arg());
  nlohmann::json doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == "skewband.stats/1");
  CHECK(doc["period"] == "90300");
  CHECK(doc["rows"][0]["count"] == 27398);
  CHECK(doc["rows"][0]["percent"].get<double>() == doctest::Approx(30.3411));
}

TEST_CASE("cli: conjecture sweep stays in agreement") {
  TempDir dir;
  RunResult r = run_cli("conjecture --n-max 10 " + dir.cache_arg());
  CHECK(r.rc == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 26);  // header + 1+3+5+7+9 pairs
  CHECK(lines[0] == "n,k,multiplicity,nullity,agrees");
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(lines[i].substr(lines[i].rfind(',') + 1) == "true");
  CHECK(lines[1] == "2,1,0,0,true");

  RunResult p =
      run_cli("conjecture --n-max 6 --format plain " + dir.cache_arg());
  CHECK(p.rc == 0);
  CHECK(p.out.find("ALL AGREE (9 pairs)\n") != std::string::npos);
}

TEST_CASE("cli: verify modes pass at small sizes") {
  TempDir dir;
  RunResult methods =
      run_cli("verify --k-max 4 --mode methods " + dir.cache_arg());
  CHECK(methods.rc == 0);
  CHECK(methods.out.find("PASS methods k<=4") != std::string::npos);

  RunResult special =
      run_cli("verify --k-max 6 --mode special-cases " + dir.cache_arg());
  CHECK(special.rc == 0);
  CHECK(special.out.find("PASS special-cases k<=6") != std::string::npos);

  RunResult lemmas = run_cli(
      "verify --k-max 4 --mode lemmas --samples 50 --seed 7 " +
      dir.cache_arg());
  CHECK(lemmas.rc == 0);
  CHECK(lemmas.out.find("PASS lemmas (seed=7, samples=50)") !=
        std::string::npos);

  RunResult threaded = run_cli(
      "verify --k-max 2 --mode methods --threads 2 " + dir.cache_arg());
  CHECK(threaded.rc == 0);
}

TEST_CASE("cli: --out writes the same bytes to a file") {
  TempDir dir;
  RunResult direct = run_cli("apexes --k 6 " + dir.cache_arg());
  const fs::path target = dir.path / "table.csv";
  RunResult filed = run_cli("apexes --k 6 --out " + target.string() + " " +
                            dir.cache_arg());
  CHECK(filed.rc == 0);
  CHECK(filed.out.empty());
  std::ifstream in(target);
  std::string content{std::istreambuf_iterator<char>(in), {}};
  CHECK(content == direct.out);
}
