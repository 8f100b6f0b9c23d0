#pragma once

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mapcount {

/// Largest edge count accepted by parse_profile.
inline constexpr std::int64_t kMaxProfileEdges = 1'000'000;

/// Thrown by parse_profile; `position()` is the 0-based offset of the offending character.
class ProfileParseError : public std::invalid_argument {
 public:
  ProfileParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Face-degree profile: `multiplicity(i)` faces of degree 2i.
///
/// Stored sparsely as (half-degree, multiplicity) pairs sorted by half-degree,
/// with zero multiplicities never stored, so equality is structural.
class DegreeProfile {
 public:
  struct Entry {
    std::int64_t half_degree;
    std::int64_t multiplicity;
    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  DegreeProfile() = default;
  /// Accepts entries in any order; merges duplicates and drops zero multiplicities.
  /// Throws std::invalid_argument on a non-positive half-degree or negative multiplicity.
  explicit DegreeProfile(std::vector<Entry> entries);

  /// The profile {f_i = count}.
  static DegreeProfile single(std::int64_t half_degree, std::int64_t count = 1);
  /// Profile whose faces have the given half-degrees (e.g. cycle lengths of a face permutation).
  static DegreeProfile from_cycle_lengths(const std::vector<std::int64_t>& lengths);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t multiplicity(std::int64_t half_degree) const;

  std::int64_t edges() const;
  std::int64_t faces() const;

  /// Canonical "i:f,i:f" rendering, ascending in i; empty string for the empty profile.
  std::string str() const;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
  friend auto operator<=>(const DegreeProfile&, const DegreeProfile&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Parses `entry ("," entry)*` with `entry = i ":" f_i`, i >= 1, f_i >= 1.
/// Rejects duplicate indices, zero multiplicities and profiles with more than
/// kMaxProfileEdges edges.
DegreeProfile parse_profile(std::string_view text);

/// Every ordered pair (s, t) with s + t = f componentwise, in lexicographic
/// order of the s-vector. There are prod(f_i + 1) of them.
class SubprofileRange {
 public:
  explicit SubprofileRange(DegreeProfile whole);

  class iterator {
   public:
    using value_type = std::pair<DegreeProfile, DegreeProfile>;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    value_type operator*() const;
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.counter_ == b.counter_); }

   private:
    friend class SubprofileRange;
    iterator(const SubprofileRange* owner, bool done);
    const SubprofileRange* owner_ = nullptr;
    std::vector<std::int64_t> counter_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }
  /// prod(f_i + 1), saturating at INT64_MAX.
  std::int64_t size() const;

 private:
  DegreeProfile whole_;
};

inline SubprofileRange subprofiles(const DegreeProfile& f) { return SubprofileRange(f); }

/// Euler bookkeeping for a genus-g map with the given face profile.
struct EulerData {
  std::int64_t genus = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  /// 2 - 2g + edges - faces; may be <= 0 for infeasible states.
  std::int64_t vertices = 0;
};

EulerData euler(std::int64_t genus, const DegreeProfile& f);

/// All profiles with exactly `edges` edges (partitions of `edges`), in
/// canonical-string order.
std::vector<DegreeProfile> profiles_with_edges(std::int64_t edges);

}  // namespace mapcount
