#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mapcount {

/// Unbounded signed integer. Every count produced by the library is one of these.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses "-?[0-9]+"; throws std::invalid_argument on anything else.
  static ExactInt parse(std::string_view text);

  std::string str() const { return v_.get_str(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const { return v_.fits_slong_p(); }
  std::int64_t to_int64() const { return v_.get_si(); }
  const mpz_class& mpz() const { return v_; }

  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }
  ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }

  /// this += a * b without a temporary.
  void add_product(const ExactInt& a, const ExactInt& b) {
    mpz_addmul(v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  }
  /// this *= c for a machine integer c.
  void scale(std::int64_t c) { v_ *= static_cast<long>(c); }

  /// Quotient when `divisor` divides this exactly, nullopt otherwise (including divisor == 0).
  std::optional<ExactInt> divide_exact(const ExactInt& divisor) const;

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

/// Rational number kept in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const ExactInt& v) : v_(v.mpz()) {}            // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  ExactRational(const ExactInt& num, const ExactInt& den);

  /// Parses "-?[0-9]+" or "-?[0-9]+/[0-9]+".
  static ExactRational parse(std::string_view text);

  ExactInt numerator() const { return ExactInt(mpz_class(v_.get_num())); }
  ExactInt denominator() const { return ExactInt(mpz_class(v_.get_den())); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
  /// Throws std::domain_error on division by zero.
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

/// Binomial coefficient with the vanishing convention: 0 unless 0 <= b <= a.
ExactInt binomial(std::int64_t a, std::int64_t b);

/// binomial(2n, n) / (n + 1).
ExactInt catalan(std::int64_t n);

// Pascal rows truncated at column `max_bottom`, grown on demand. Recurrence
// inner loops read binomials from here instead of recomputing them.
// Not safe to grow concurrently: call reserve() before sharing across threads.
class BinomialTable {
 public:
  explicit BinomialTable(std::int64_t max_bottom) : max_bottom_(max_bottom) {}

  void reserve(std::int64_t max_top);
  const ExactInt& operator()(std::int64_t a, std::int64_t b) const;
  const ExactInt& get(std::int64_t a, std::int64_t b);

  std::int64_t max_bottom() const { return max_bottom_; }

 private:
  std::int64_t max_bottom_;
  std::vector<std::vector<ExactInt>> rows_;
};

}  // namespace mapcount
