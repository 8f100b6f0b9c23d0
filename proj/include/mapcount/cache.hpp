#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mapcount/recurrences.hpp"

namespace mapcount {

inline constexpr std::string_view kCacheHeader = "mapcount-cache v1";

struct CacheLoadResult {
  bool loaded = false;
  std::size_t entries = 0;
  /// Set when the file existed but was ignored.
  std::string warning;
};

/// Header line then "key<TAB>value" lines sorted by key.
std::string render_cache(const CountTable& table);

/// Merges a cache file into `table`. A missing file is not an error. A wrong
/// header or a malformed line causes the whole file to be ignored with a
/// warning.
CacheLoadResult load_cache(const std::filesystem::path& path, CountTable& table);

/// Writes render_cache(table) to `path` via a temporary file and rename.
void save_cache(const std::filesystem::path& path, const CountTable& table);

}  // namespace mapcount
