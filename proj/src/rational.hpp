#pragma once

#include <gmpxx.h>

#include <string>

namespace idcode {

/// Exact rational in canonical form (gcd(num, den) = 1, den > 0), backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long num, long den = 1) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& value() const noexcept { return v_; }
  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  std::string to_string() const {
    return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
  }
  double to_double() const { return v_.get_d(); }

  /// Smallest integer >= value.
  long ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q.get_si();
  }
  long floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q.get_si();
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }

 private:
  mpq_class v_;
};

}  // namespace idcode
