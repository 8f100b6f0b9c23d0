#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mapcount {

enum class Provenance { formula, formula_experimental, oracle, series };

std::string to_string(Provenance p);

enum class Format { plain, json, csv };

Format parse_format(std::string_view text);

/// One emitted result. Values are exact decimal strings ("123" or "p/q").
struct OutputRecord {
  using Param = std::variant<std::int64_t, std::string>;

  std::string model;
  std::vector<std::pair<std::string, Param>> params;
  std::string value;
  Provenance provenance = Provenance::formula;

  const Param* param(std::string_view name) const;
};

/// CSV columns shared by every command.
inline constexpr std::string_view kCsvHeader = "model,k_or_m,genus,n_or_profile,faces,value,provenance";

/// Writes records. In json, a single record is an object when `single` is
/// set, otherwise the records form an array. `extra_csv` names params appended
/// as additional CSV columns after the fixed ones.
void write_records(std::ostream& out, std::span<const OutputRecord> records, Format format, bool single,
                   std::span<const std::string> extra_csv = {});

}  // namespace mapcount
