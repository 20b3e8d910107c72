#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "skewband/apex.hpp"

namespace skewband {

inline constexpr const char* kApexCacheSchema = "skewband.apex-table/1";

std::filesystem::path apex_cache_path(const std::filesystem::path& dir,
                                      std::int64_t k);

// Writes the apex table as JSON (schema tag, k, rows sorted by eta with
// eta as a decimal string).  Creates the directory when needed; the file
// is replaced atomically.  Returns the path written.
std::filesystem::path save_line_graph(const LineGraph& lg,
                                      const std::filesystem::path& dir);

// Loads and fully revalidates a cached table.  Returns nullopt when the
// file is missing or unusable; in the unusable case *error describes the
// problem (parse failure, schema mismatch, invariant breach) so callers
// can warn before rebuilding.  A missing file leaves *error empty.
std::optional<LineGraph> load_line_graph(const std::filesystem::path& dir,
                                         std::int64_t k,
                                         std::string* error = nullptr);

// Cache-through convenience: load when valid, otherwise build, save, and
// return.  *rebuilt_reason (optional) is set to the load error when a
// stale or corrupt file was replaced.
LineGraph load_or_build_line_graph(const std::filesystem::path& dir,
                                   std::int64_t k,
                                   std::string* rebuilt_reason = nullptr);

}  // namespace skewband
