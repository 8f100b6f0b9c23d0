#pragma once

#include <cstdint>
#include <vector>

#include "mapcount/exactnum.hpp"

namespace mapcount {

/// Power series in z with exact coefficients c_0..c_N; every operation
/// truncates at the order N fixed at construction.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::int64_t order);
  TruncatedSeries(std::int64_t order, std::vector<ExactInt> coefficients);

  static TruncatedSeries constant(std::int64_t order, const ExactInt& c);
  /// The monomial z (zero when order is 0).
  static TruncatedSeries z(std::int64_t order);

  std::int64_t order() const { return order_; }
  const ExactInt& operator[](std::int64_t i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<ExactInt>& coefficients() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const ExactInt& s);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const ExactInt& s) { return a *= s; }

  /// Nonnegative integer power by repeated squaring.
  TruncatedSeries pow(std::int64_t e) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_order(const TruncatedSeries& o) const;
  std::int64_t order_;
  std::vector<ExactInt> c_;
};

/// Solution of t = 1 + z * binom(2k-1, k) * t^k with t(0) = 1, by fixed-point
/// iteration from t = 0. Each iteration fixes one more coefficient, so
/// `iterations` defaults to N + 1.
TruncatedSeries angulation_t_series(std::int64_t k, std::int64_t order, std::int64_t iterations = -1);

/// Genus-0 generating series of rooted bipartite 2k-angulations by face
/// count: t - z binom(2k-1, k+1) t^{k+1} - 1. Its constant term is 0.
TruncatedSeries planar_angulation_series(std::int64_t k, std::int64_t order);

}  // namespace mapcount
