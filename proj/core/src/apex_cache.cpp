#include "skewband/apex_cache.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "skewband/numeric.hpp"

namespace skewband {

namespace {

using ordered_json = nlohmann::ordered_json;

bool parse_decimal(const std::string& s, std::int64_t* out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::filesystem::path apex_cache_path(const std::filesystem::path& dir,
                                      std::int64_t k) {
  return dir / ("apexes-k" + std::to_string(k) + ".json");
}

std::filesystem::path save_line_graph(const LineGraph& lg,
                                      const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  ordered_json j;
  j["schema"] = kApexCacheSchema;
  j["k"] = lg.k();
  ordered_json rows = ordered_json::array();
  for (const Apex& a : lg.apexes()) {
    ordered_json row;
    row["q"] = a.q;
    row["j"] = a.j;
    // decimal string: positions reach k(k+1), too big to trust every
    // JSON consumer with
    row["eta"] = std::to_string(a.eta);
    row["f"] = a.f;
    rows.push_back(std::move(row));
  }
  j["apexes"] = std::move(rows);

  const std::filesystem::path path = apex_cache_path(dir, lg.k());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write apex cache at " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
  return path;
}

std::optional<LineGraph> load_line_graph(const std::filesystem::path& dir,
                                         std::int64_t k,
                                         std::string* error) {
  if (error) error->clear();
  const std::filesystem::path path = apex_cache_path(dir, k);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;

  auto fail = [&](const std::string& why) -> std::optional<LineGraph> {
    if (error) *error = path.string() + ": " + why;
    return std::nullopt;
  };

  std::ifstream in(path);
  if (!in) return fail("unreadable");
  ordered_json j = ordered_json::parse(in, nullptr, false);
  if (j.is_discarded()) return fail("not valid JSON");
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string() ||
      j["schema"].get<std::string>() != kApexCacheSchema)
    return fail("schema tag mismatch");
  if (!j.contains("k") || !j["k"].is_number_integer() ||
      j["k"].get<std::int64_t>() != k)
    return fail("bandwidth mismatch");
  if (!j.contains("apexes") || !j["apexes"].is_array())
    return fail("apex list missing");

  std::vector<Apex> apexes;
  apexes.reserve(j["apexes"].size());
  for (const auto& row : j["apexes"]) {
    if (!row.is_object() || !row.contains("q") || !row.contains("j") ||
        !row.contains("eta") || !row.contains("f") ||
        !row["q"].is_number_integer() || !row["j"].is_number_integer() ||
        !row["eta"].is_string() || !row["f"].is_number_integer())
      return fail("malformed apex row");
    Apex a;
    a.q = row["q"].get<std::int64_t>();
    a.j = row["j"].get<std::int64_t>();
    a.f = row["f"].get<std::int64_t>();
    if (!parse_decimal(row["eta"].get<std::string>(), &a.eta))
      return fail("apex position is not a decimal integer");
    apexes.push_back(a);
  }

  try {
    return LineGraph::from_apexes(k, std::move(apexes));
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

LineGraph load_or_build_line_graph(const std::filesystem::path& dir,
                                   std::int64_t k,
                                   std::string* rebuilt_reason) {
  if (rebuilt_reason) rebuilt_reason->clear();
  std::string why;
  if (auto cached = load_line_graph(dir, k, &why)) return *std::move(cached);
  if (rebuilt_reason) *rebuilt_reason = why;
  LineGraph lg = LineGraph::build(k);
  save_line_graph(lg, dir);
  return lg;
}

}  // namespace skewband
