#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "mapcount/exactnum.hpp"
#include "mapcount/profiles.hpp"

namespace mapcount {

enum class CountModel { bipartite, angulation, constellation, constellation_faces, onefaced, monotone };

std::string to_string(CountModel m);

/// Top-of-binomial convention for the face-refined constellation recurrence.
/// `corrected` uses the colored-vertex count of the second factor,
/// (m-1)n2 + 2 - 2g2 - f2; `printed` uses 2g2 - f2 + (m-1)n2.
enum class FaceVariant { corrected, printed };

std::string to_string(FaceVariant v);
FaceVariant parse_variant(std::string_view text);

/// Canonical memo key. Equal mathematical queries produce identical text, e.g.
/// "angulation k=2 g=1 n=2" or "bipartite g=0 f=1:2".
class CountKey {
 public:
  static CountKey bipartite(std::int64_t g, const DegreeProfile& f);
  static CountKey angulation(std::int64_t k, std::int64_t g, std::int64_t n);
  static CountKey constellation(std::int64_t m, std::int64_t g, std::int64_t n);
  static CountKey constellation_faces(std::int64_t m, std::int64_t g, std::int64_t n, std::int64_t f, FaceVariant v);
  static CountKey onefaced(std::int64_t m, std::int64_t g, std::int64_t n);
  static CountKey monotone(std::int64_t g, std::int64_t n);

  /// Inverse of text(); throws std::invalid_argument on anything non-canonical.
  static CountKey parse(std::string_view text);

  CountModel model() const { return model_; }
  const std::string& text() const { return text_; }
  /// Whether values under this key are rationals (monotone) rather than integers.
  bool rational() const { return model_ == CountModel::monotone; }

  friend bool operator==(const CountKey& a, const CountKey& b) { return a.text_ == b.text_; }

 private:
  CountKey(CountModel m, std::string text) : model_(m), text_(std::move(text)) {}
  CountModel model_;
  std::string text_;
};

using CountValue = std::variant<ExactInt, ExactRational>;

std::string render(const CountValue& v);

/// Write-once memo store shared by all engines. Safe for concurrent readers
/// with serialized insertion.
class CountTable {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t entries = 0;
  };

  CountTable() = default;
  CountTable(const CountTable&) = delete;
  CountTable& operator=(const CountTable&) = delete;

  /// Looks up a key and records a hit or a miss.
  std::optional<CountValue> find(const CountKey& key) const;
  /// Lookup that leaves the statistics untouched.
  std::optional<CountValue> peek(const CountKey& key) const;
  /// Inserts a value. Re-inserting an equal value is a no-op; a different value
  /// throws std::logic_error.
  void insert(const CountKey& key, CountValue value);

  std::size_t size() const;
  Stats stats() const;
  void reset_stats();

  /// (key text, rendered value) pairs sorted by key text.
  std::vector<std::pair<std::string, std::string>> sorted_entries() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, CountValue> store_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Raised when a rearranged recurrence hits a zero divisor outside its base
/// cases or a division that leaves a remainder. Never truncated silently.
class ExactnessViolation : public std::runtime_error {
 public:
  enum class Kind { divisor_zero, inexact_division };
  ExactnessViolation(Kind kind, std::string state, const std::string& detail);
  Kind kind() const { return kind_; }
  /// Canonical key text of the offending state.
  const std::string& state() const { return state_; }

 private:
  Kind kind_;
  std::string state_;
};

/// The one-faced m >= 3 path was requested without opting in.
class ExperimentalDisabled : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One-faced counts for m >= 3 come from an unverified identity.
inline bool one_faced_is_experimental(std::int64_t m) { return m >= 3; }

/// Memoized counting engines. Each query fills every state it depends on in
/// dependency order (no recursion), reading and writing `table`.
class Counter {
 public:
  explicit Counter(CountTable& table, unsigned threads = 1) : table_(table), threads_(threads == 0 ? 1 : threads) {}

  /// Bipartite maps of genus g with f_i faces of degree 2i.
  ExactInt bipartite(std::int64_t g, const DegreeProfile& f);
  /// Bipartite 2k-angulations of genus g with n faces.
  ExactInt angulation(std::int64_t k, std::int64_t g, std::int64_t n);
  /// m-constellations of genus g with n star vertices.
  ExactInt constellation(std::int64_t m, std::int64_t g, std::int64_t n);
  /// m-constellations of genus g with n star vertices and f faces.
  ExactInt constellation_by_faces(std::int64_t m, std::int64_t g, std::int64_t n, std::int64_t f,
                                  FaceVariant variant = FaceVariant::corrected);
  /// One-faced m-constellations. m >= 3 requires allow_experimental and uses
  /// the oracle for its genus-0 values.
  ExactInt one_faced(std::int64_t m, std::int64_t g, std::int64_t n, bool allow_experimental = false);
  /// Unramified monotone Hurwitz numbers, normalized by 1/n!.
  ExactRational monotone(std::int64_t g, std::int64_t n);

  CountTable& table() { return table_; }
  unsigned threads() const { return threads_; }

 private:
  CountTable& table_;
  unsigned threads_;
};

// Single-shot conveniences backed by a private table.
ExactInt count_bipartite(std::int64_t g, const DegreeProfile& f);
ExactInt count_angulation(std::int64_t k, std::int64_t g, std::int64_t n);
ExactInt count_constellation(std::int64_t m, std::int64_t g, std::int64_t n);
ExactInt count_constellation_by_faces(std::int64_t m, std::int64_t g, std::int64_t n, std::int64_t f,
                                      FaceVariant variant = FaceVariant::corrected);
ExactInt count_one_faced(std::int64_t m, std::int64_t g, std::int64_t n, bool allow_experimental = false);
ExactRational count_monotone(std::int64_t g, std::int64_t n);

}  // namespace mapcount
