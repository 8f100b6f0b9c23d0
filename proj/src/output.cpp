#include "mapcount/output.hpp"

#include <stdexcept>

#include <json.hpp>

namespace mapcount {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::formula_experimental: return "formula-experimental";
    case Provenance::oracle: return "oracle";
    case Provenance::series: return "series";
  }
  return "?";
}

Format parse_format(std::string_view text) {
  if (text == "plain") return Format::plain;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

const OutputRecord::Param* OutputRecord::param(std::string_view name) const {
  for (const auto& [k, v] : params)
    if (k == name) return &v;
  return nullptr;
}

namespace {

std::string param_text(const OutputRecord::Param& p) {
  if (const auto* i = std::get_if<std::int64_t>(&p)) return std::to_string(*i);
  return std::get<std::string>(p);
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) {
    if (const auto* i = std::get_if<std::int64_t>(&v))
      params[k] = *i;
    else
      params[k] = std::get<std::string>(v);
  }
  nlohmann::ordered_json j;
  j["model"] = r.model;
  j["params"] = std::move(params);
  j["value"] = r.value;
  j["provenance"] = to_string(r.provenance);
  return j;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string first_param(const OutputRecord& r, std::initializer_list<std::string_view> names) {
  for (auto n : names)
    if (const auto* p = r.param(n)) return param_text(*p);
  return "";
}

}  // namespace

void write_records(std::ostream& out, std::span<const OutputRecord> records, Format format, bool single,
                   std::span<const std::string> extra_csv) {
  switch (format) {
    case Format::plain:
      for (const auto& r : records) {
        out << r.model;
        for (const auto& [k, v] : r.params) out << ' ' << k << '=' << param_text(v);
        out << " value=" << r.value << " [" << to_string(r.provenance) << "]\n";
      }
      break;
    case Format::json:
      if (single && records.size() == 1) {
        out << to_json(records.front()).dump() << '\n';
      } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        out << arr.dump() << '\n';
      }
      break;
    case Format::csv:
      out << kCsvHeader;
      for (const auto& e : extra_csv) out << ',' << e;
      out << '\n';
      for (const auto& r : records) {
        out << csv_field(r.model) << ',' << csv_field(first_param(r, {"k", "m"})) << ',' << csv_field(first_param(r, {"g"})) << ','
            << csv_field(first_param(r, {"n", "profile"})) << ',' << csv_field(first_param(r, {"f"})) << ',' << csv_field(r.value)
            << ',' << to_string(r.provenance);
        for (const auto& e : extra_csv) out << ',' << csv_field(first_param(r, {e}));
        out << '\n';
      }
      break;
  }
}

}  // namespace mapcount
