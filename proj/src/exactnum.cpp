#include "mapcount/exactnum.hpp"

#include <ostream>
#include <stdexcept>

namespace mapcount {

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

const ExactInt& zero() {
  static const ExactInt z;
  return z;
}

}  // namespace

ExactInt ExactInt::parse(std::string_view text) {
  if (!is_decimal(text)) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  return ExactInt(mpz_class(std::string(text), 10));
}

std::optional<ExactInt> ExactInt::divide_exact(const ExactInt& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (!mpz_divisible_p(v_.get_mpz_t(), divisor.v_.get_mpz_t())) return std::nullopt;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), divisor.v_.get_mpz_t());
  return ExactInt(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(ExactInt::parse(text));
  auto den = text.substr(slash + 1);
  if (den.empty() || den.front() == '-') throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  return ExactRational(ExactInt::parse(text.substr(0, slash)), ExactInt::parse(den));
}

std::string ExactRational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.sign() == 0) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.str(); }

ExactInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return ExactInt{};
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return ExactInt(std::move(r));
}

ExactInt catalan(std::int64_t n) {
  if (n < 0) throw std::domain_error("catalan of a negative index");
  auto c = binomial(2 * n, n).divide_exact(ExactInt(n + 1));
  return *c;
}

void BinomialTable::reserve(std::int64_t max_top) {
  for (auto a = static_cast<std::int64_t>(rows_.size()); a <= max_top; ++a) {
    auto width = std::min(a, max_bottom_) + 1;
    std::vector<ExactInt> row(static_cast<std::size_t>(width));
    row[0] = 1;
    for (std::int64_t b = 1; b < width; ++b) {
      const auto& prev = rows_[static_cast<std::size_t>(a - 1)];
      row[b] = prev[b - 1];
      if (b < static_cast<std::int64_t>(prev.size())) row[b] += prev[b];
    }
    rows_.push_back(std::move(row));
  }
}

const ExactInt& BinomialTable::operator()(std::int64_t a, std::int64_t b) const {
  if (a < 0 || b < 0 || b > a) return zero();
  if (b > max_bottom_ || a >= static_cast<std::int64_t>(rows_.size()))
    throw std::out_of_range("binomial table not reserved for (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

const ExactInt& BinomialTable::get(std::int64_t a, std::int64_t b) {
  if (a >= 0 && b >= 0 && b <= a && b > max_bottom_) {
    max_bottom_ = b;
    rows_.clear();
  }
  reserve(a);
  return (*this)(a, b);
}

}  // namespace mapcount
