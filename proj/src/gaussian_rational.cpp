#include "logcy/gaussian_rational.hpp"

#include "logcy/error.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

namespace logcy {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigRational parse_rational(std::string_view s, std::string_view whole) {
  auto fail = [&](const std::string& why) {
    return ParseError("bad coordinate \"" + std::string(whole) + "\": " + why);
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw fail("expected integer or a/b");
  BigInt n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw fail("zero denominator");
  BigRational q(n, d);
  q.canonicalize();
  return negative ? BigRational(-q) : q;
}

}  // namespace

GaussianRational::GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("bad coordinate: empty string");
  std::string_view v(s);

  if (v.back() != 'i') return {parse_rational(v, text), 0};

  v.remove_suffix(1);
  if (!v.empty() && v.back() == '*') v.remove_suffix(1);
  // Split the imaginary coefficient off at the last sign not in leading position.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = v.size(); k-- > 1;) {
    if (v[k] == '+' || v[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : v.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? v : v.substr(split);
  if (text.find("*i") == std::string_view::npos && !im_part.empty() && im_part != "+" && im_part != "-")
    throw ParseError("bad coordinate \"" + std::string(text) + "\": imaginary part needs '*i'");
  BigRational im;
  if (im_part.empty() || im_part == "+") im = 1;
  else if (im_part == "-") im = -1;
  else im = parse_rational(im_part, text);
  BigRational re = re_part.empty() ? BigRational(0) : parse_rational(re_part, text);
  return {re, im};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(i)");
  BigRational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational r = re_ * o.re_ - im_ * o.im_;
  BigRational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

bool lex_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re_ != b.re_) return a.re_ < b.re_;
  return a.im_ < b.im_;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_abs = BigRational(abs(im_)).get_str();
  std::string im_text = im_abs == "1" ? "i" : im_abs + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_text;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + im_text;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

GaussianRational pow(const GaussianRational& z, const BigInt& n) {
  if (sgn(n) < 0) return pow(z.inverse(), BigInt(-n));
  GaussianRational result(1), base = z;
  BigInt e = n;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result *= base;
    e >>= 1;
    if (sgn(e) > 0) base *= base;
  }
  return result;
}

GaussianRational pow(const GaussianRational& z, long n) { return pow(z, BigInt(n)); }

std::optional<GaussianRational> nth_root(const GaussianRational& z, unsigned long d) {
  if (d == 0) throw DomainError("0-th root");
  if (d == 1 || z.is_zero()) return z;

  // z = G / M^d with G a Gaussian integer and M a positive integer.
  BigInt m;
  mpz_lcm(m.get_mpz_t(), z.re().get_den_mpz_t(), z.im().get_den_mpz_t());
  BigInt md;
  mpz_pow_ui(md.get_mpz_t(), m.get_mpz_t(), d);
  BigInt gre = BigInt(z.re() * md), gim = BigInt(z.im() * md);
  GaussianRational g(gre, gim);

  BigInt nrm = gre * gre + gim * gim;
  BigInt r;
  if (mpz_root(r.get_mpz_t(), nrm.get_mpz_t(), d) == 0) return std::nullopt;

  // |w|^2 = r; locate candidates numerically, then verify exactly.
  long double radius = std::sqrt(static_cast<long double>(r.get_d()));
  long double arg = std::atan2(static_cast<long double>(gim.get_d()), static_cast<long double>(gre.get_d()));
  for (unsigned long k = 0; k < d; ++k) {
    long double theta = (arg + 2 * std::numbers::pi_v<long double> * k) / d;
    long double x = radius * std::cos(theta), y = radius * std::sin(theta);
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        BigInt cx(static_cast<double>(std::llround(x) + dx));
        BigInt cy(static_cast<double>(std::llround(y) + dy));
        GaussianRational w(cx, cy);
        if (pow(w, static_cast<long>(d)) == g) return w / GaussianRational(BigRational(m));
      }
    }
  }
  return std::nullopt;
}

}  // namespace logcy
