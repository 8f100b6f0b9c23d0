#include "mapcount/profiles.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

namespace mapcount {

DegreeProfile::DegreeProfile(std::vector<Entry> entries) {
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& e : entries) {
    if (e.half_degree < 1) throw std::invalid_argument("half-degree must be positive");
    if (e.multiplicity < 0) throw std::invalid_argument("multiplicity must be nonnegative");
    merged[e.half_degree] += e.multiplicity;
  }
  for (auto [i, f] : merged)
    if (f > 0) entries_.push_back({i, f});
}

DegreeProfile DegreeProfile::single(std::int64_t half_degree, std::int64_t count) {
  return DegreeProfile({{half_degree, count}});
}

DegreeProfile DegreeProfile::from_cycle_lengths(const std::vector<std::int64_t>& lengths) {
  std::vector<Entry> e;
  e.reserve(lengths.size());
  for (auto l : lengths) e.push_back({l, 1});
  return DegreeProfile(std::move(e));
}

std::int64_t DegreeProfile::multiplicity(std::int64_t half_degree) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), half_degree,
                             [](const Entry& e, std::int64_t i) { return e.half_degree < i; });
  return (it != entries_.end() && it->half_degree == half_degree) ? it->multiplicity : 0;
}

std::int64_t DegreeProfile::edges() const {
  std::int64_t n = 0;
  for (const auto& e : entries_) n += e.half_degree * e.multiplicity;
  return n;
}

std::int64_t DegreeProfile::faces() const {
  std::int64_t n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

std::string DegreeProfile::str() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.half_degree) + ':' + std::to_string(e.multiplicity);
  }
  return out;
}

namespace {

// Reads a run of digits starting at `pos`; advances pos.
std::int64_t read_number(std::string_view text, std::size_t& pos) {
  auto start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (start == pos) throw ProfileParseError("expected a number", start);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
  if (ec != std::errc{}) throw ProfileParseError("number out of range", start);
  return v;
}

}  // namespace

DegreeProfile parse_profile(std::string_view text) {
  std::vector<DegreeProfile::Entry> entries;
  std::size_t pos = 0;
  std::int64_t edges = 0;
  while (true) {
    auto entry_start = pos;
    auto i = read_number(text, pos);
    if (i < 1) throw ProfileParseError("degree index must be at least 1", entry_start);
    if (pos >= text.size() || text[pos] != ':') throw ProfileParseError("expected ':'", pos);
    ++pos;
    auto mult_start = pos;
    auto f = read_number(text, pos);
    if (f < 1) throw ProfileParseError("zero multiplicity", mult_start);
    for (const auto& e : entries)
      if (e.half_degree == i) throw ProfileParseError("duplicate degree index " + std::to_string(i), entry_start);
    if (f > kMaxProfileEdges / i || edges + i * f > kMaxProfileEdges)
      throw ProfileParseError("profile exceeds " + std::to_string(kMaxProfileEdges) + " edges", entry_start);
    edges += i * f;
    entries.push_back({i, f});
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ProfileParseError("expected ',' or end of input", pos);
    ++pos;
  }
  return DegreeProfile(std::move(entries));
}

SubprofileRange::SubprofileRange(DegreeProfile whole) : whole_(std::move(whole)) {}

std::int64_t SubprofileRange::size() const {
  std::int64_t n = 1;
  for (const auto& e : whole_.entries()) {
    if (n > std::numeric_limits<std::int64_t>::max() / (e.multiplicity + 1)) return std::numeric_limits<std::int64_t>::max();
    n *= e.multiplicity + 1;
  }
  return n;
}

SubprofileRange::iterator::iterator(const SubprofileRange* owner, bool done)
    : owner_(owner), counter_(owner->whole_.entries().size(), 0), done_(done) {}

SubprofileRange::iterator::value_type SubprofileRange::iterator::operator*() const {
  const auto& entries = owner_->whole_.entries();
  std::vector<DegreeProfile::Entry> s, t;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    s.push_back({entries[j].half_degree, counter_[j]});
    t.push_back({entries[j].half_degree, entries[j].multiplicity - counter_[j]});
  }
  return {DegreeProfile(std::move(s)), DegreeProfile(std::move(t))};
}

SubprofileRange::iterator& SubprofileRange::iterator::operator++() {
  const auto& entries = owner_->whole_.entries();
  // Odometer with the last entry varying fastest, which is lexicographic order.
  for (std::size_t j = entries.size(); j-- > 0;) {
    if (counter_[j] < entries[j].multiplicity) {
      ++counter_[j];
      return *this;
    }
    counter_[j] = 0;
  }
  done_ = true;
  return *this;
}

EulerData euler(std::int64_t genus, const DegreeProfile& f) {
  EulerData d;
  d.genus = genus;
  d.edges = f.edges();
  d.faces = f.faces();
  d.vertices = 2 - 2 * genus + d.edges - d.faces;
  return d;
}

std::vector<DegreeProfile> profiles_with_edges(std::int64_t edges) {
  std::vector<DegreeProfile> out;
  std::vector<std::int64_t> parts;
  auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
    if (remaining == 0) {
      out.push_back(DegreeProfile::from_cycle_lengths(parts));
      return;
    }
    for (auto p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  if (edges > 0) rec(rec, edges, edges);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.str() < b.str(); });
  return out;
}

}  // namespace mapcount
