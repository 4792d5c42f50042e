#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace logcy {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Exact element of Q(i). Stands in for C^x throughout: every period value,
/// boundary coordinate and marking point is one of these.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}
  GaussianRational(BigRational re, BigRational im = 0);

  static GaussianRational i() { return {0, 1}; }

  /// Parses "a/b", "a/b+c/d*i", "a/b-c/d*i", "c/d*i", "i", "-i".
  /// Denominators are optional; a zero denominator throws ParseError.
  static GaussianRational parse(std::string_view text);

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  /// |z|^2 as a rational.
  BigRational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic on (re, im); only used to get deterministic orderings.
  friend bool lex_less(const GaussianRational& a, const GaussianRational& b);

  std::string to_string() const;

private:
  BigRational re_{0};
  BigRational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// z^n for any integer n; z must be nonzero when n < 0.
GaussianRational pow(const GaussianRational& z, const BigInt& n);
GaussianRational pow(const GaussianRational& z, long n);

/// Some w in Q(i) with w^d == z, or nullopt when no such w exists in Q(i).
/// d >= 1. Exact: candidates are verified by multiplication.
std::optional<GaussianRational> nth_root(const GaussianRational& z, unsigned long d);

}  // namespace logcy
