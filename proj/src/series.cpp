#include "mapcount/series.hpp"

#include <stdexcept>

namespace mapcount {

TruncatedSeries::TruncatedSeries(std::int64_t order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  c_.resize(static_cast<std::size_t>(order + 1));
}

TruncatedSeries::TruncatedSeries(std::int64_t order, std::vector<ExactInt> coefficients) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coefficients.size() && i < c_.size(); ++i) c_[i] = std::move(coefficients[i]);
}

TruncatedSeries TruncatedSeries::constant(std::int64_t order, const ExactInt& c) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::z(std::int64_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

void TruncatedSeries::check_order(const TruncatedSeries& o) const {
  if (o.order_ != order_) throw std::invalid_argument("series orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_order(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  check_order(o);
  std::vector<ExactInt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) out[i + j].add_product(c_[i], o.c_[j]);
  }
  c_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const ExactInt& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

TruncatedSeries TruncatedSeries::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative series power");
  auto result = constant(order_, 1);
  auto base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

TruncatedSeries angulation_t_series(std::int64_t k, std::int64_t order, std::int64_t iterations) {
  if (k < 2) throw std::invalid_argument("angulation series needs k >= 2");
  if (iterations < 0) iterations = order + 1;
  const auto one = TruncatedSeries::constant(order, 1);
  const auto step = TruncatedSeries::z(order) * binomial(2 * k - 1, k);
  TruncatedSeries t(order);
  for (std::int64_t it = 0; it < iterations; ++it) t = one + step * t.pow(k);
  return t;
}

TruncatedSeries planar_angulation_series(std::int64_t k, std::int64_t order) {
  auto t = angulation_t_series(k, order);
  auto f0 = t - TruncatedSeries::z(order) * binomial(2 * k - 1, k + 1) * t.pow(k + 1);
  f0 -= TruncatedSeries::constant(order, 1);
  return f0;
}

}  // namespace mapcount
