#include "mapcount/cache.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mapcount {

std::string render_cache(const CountTable& table) {
  std::string out(kCacheHeader);
  out += '\n';
  for (const auto& [k, v] : table.sorted_entries()) out += k + '\t' + v + '\n';
  return out;
}

CacheLoadResult load_cache(const std::filesystem::path& path, CountTable& table) {
  CacheLoadResult result;
  std::ifstream in(path);
  if (!in) return result;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) {
    result.warning = "cache file " + path.string() + " has an unsupported header ('" + line + "'); ignoring it";
    return result;
  }
  std::vector<std::pair<CountKey, CountValue>> pending;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    try {
      if (tab == std::string::npos) throw std::invalid_argument("missing tab");
      auto key = CountKey::parse(std::string_view(line).substr(0, tab));
      auto text = std::string_view(line).substr(tab + 1);
      CountValue value = key.rational() ? CountValue(ExactRational::parse(text)) : CountValue(ExactInt::parse(text));
      pending.emplace_back(std::move(key), std::move(value));
    } catch (const std::exception& e) {
      result.warning = "cache file " + path.string() + " line " + std::to_string(lineno) + ": " + e.what() + "; ignoring the file";
      return result;
    }
  }
  for (auto& [k, v] : pending) table.insert(k, std::move(v));
  result.loaded = true;
  result.entries = pending.size();
  return result;
}

void save_cache(const std::filesystem::path& path, const CountTable& table) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << render_cache(table);
    if (!out) throw std::runtime_error("error writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mapcount
