#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapcount/exactnum.hpp"
#include "mapcount/profiles.hpp"

namespace mapcount::oracle {

/// A permutation of {0, ..., n-1} in one-line notation: p[x] is the image of x.
using Permutation = std::vector<int>;

/// Builds a permutation of {0..n-1} from disjoint cycles given with 0-based points.
Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

/// Number of cycles, fixed points included.
int cycle_count(std::span<const int> p);

/// True iff the graph joining x to p(x), for every supplied p, is connected on {0..n-1}.
bool is_transitive(std::span<const Permutation> perms, int n);

class WorkCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Model { constellation, bipartite_profile, one_faced, monotone };

std::string to_string(Model m);

struct FaceFilter {
  enum class Kind { none, face_count, cycle_type, single_cycle };
  Kind kind = Kind::none;
  std::int64_t face_count = 0;
  DegreeProfile cycle_type;

  static FaceFilter any() { return {}; }
  static FaceFilter faces(std::int64_t f) { return {Kind::face_count, f, {}}; }
  static FaceFilter type(DegreeProfile p) { return {Kind::cycle_type, 0, std::move(p)}; }
  static FaceFilter one_face() { return {Kind::single_cycle, 0, {}}; }
};

inline constexpr double kDefaultWorkCap = 1e8;
inline constexpr int kMaxMonotoneDepth = 16;

struct OracleQuery {
  Model model = Model::constellation;
  int m = 2;
  int n = 1;
  FaceFilter filter;
  /// nullopt selects every genus. Required for the monotone model.
  std::optional<std::int64_t> genus;
  double work_cap = kDefaultWorkCap;
  /// Fix sigma_1 to one representative per conjugacy class, weighting by class size.
  bool reduce_first = false;
  unsigned threads = 1;
};

struct Tally {
  ExactInt labeled;
  /// labeled / (n-1)! for constellation models, labeled / n! for monotone.
  ExactRational rooted;
};

struct OracleResult {
  /// (genus, face statistic) -> counts. The face statistic is the cycle type of
  /// the face permutation rendered as a profile ("1:2" for two fixed points),
  /// or empty for the monotone model.
  std::map<std::pair<std::int64_t, std::string>, Tally> table;
  /// Tuples examined (constellations) or search nodes visited (monotone).
  std::uint64_t work = 0;

  /// Rooted count summed over face statistics accepted by `keep`.
  template <class Pred>
  ExactRational rooted_where(std::int64_t genus, Pred keep) const {
    ExactRational total;
    for (const auto& [key, t] : table)
      if (key.first == genus && keep(key.second)) total += t.rooted;
    return total;
  }
  ExactRational rooted(std::int64_t genus) const {
    return rooted_where(genus, [](const std::string&) { return true; });
  }
  /// Rooted counts keyed by genus, summed over face statistics.
  std::map<std::int64_t, ExactRational> rooted_by_genus() const;
};

/// Estimated tuple count for a constellation-type query; compared against the cap.
double estimated_work(const OracleQuery& q);

/// Exhaustive enumeration of m-tuples over the symmetric group on n points,
/// keeping transitive tuples. Throws WorkCapExceeded before starting when the
/// estimate is over the cap, std::invalid_argument on a malformed query.
OracleResult enumerate_constellations(const OracleQuery& q);

/// Depth-first search over monotone transposition sequences of length
/// 2n - 2 + 2g whose product is the identity and whose action is transitive.
OracleResult enumerate_monotone(int n, std::int64_t genus, unsigned threads = 1);

/// Dispatches on q.model.
OracleResult run(const OracleQuery& q);

}  // namespace mapcount::oracle
