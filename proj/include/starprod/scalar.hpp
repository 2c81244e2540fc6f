#pragma once

// Exact scalars: rationals, Gaussian rationals Q(i), and Laurent polynomials
// in the deformation parameter hbar over Q(i).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "starprod/errors.hpp"

namespace starprod {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a" or "a/b" with optional leading sign.
inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// Exact square root of a non-negative rational, if it has one.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), den.get_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Gaussian rational re + i*im.
struct ComplexQ {
  Rational re{0};
  Rational im{0};

  ComplexQ() = default;
  ComplexQ(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by intent
  ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexQ(long r) : re(r) {}  // NOLINT

  static ComplexQ i() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im) == 0; }

  ComplexQ& operator+=(const ComplexQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexQ& operator-=(const ComplexQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexQ& operator*=(const ComplexQ& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ComplexQ& operator/=(const ComplexQ& o) {
    const Rational norm = o.re * o.re + o.im * o.im;
    if (sgn(norm) == 0) throw DomainError("division by zero scalar");
    Rational r = (re * o.re + im * o.im) / norm;
    Rational i = (im * o.re - re * o.im) / norm;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ComplexQ operator+(ComplexQ a, const ComplexQ& b) { return a += b; }
  friend ComplexQ operator-(ComplexQ a, const ComplexQ& b) { return a -= b; }
  friend ComplexQ operator*(ComplexQ a, const ComplexQ& b) { return a *= b; }
  friend ComplexQ operator/(ComplexQ a, const ComplexQ& b) { return a /= b; }
  friend ComplexQ operator-(const ComplexQ& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexQ& a, const ComplexQ& b) { return a.re == b.re && a.im == b.im; }

  [[nodiscard]] ComplexQ conj() const { return {re, -im}; }
};

/// (i)^n for integer n.
inline ComplexQ i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

/// Text form used by the canonical printer: "3/2", "-i", "1/2*i", "(1 + 2*i)".
/// `standalone` controls whether a two-part value gets parentheses.
inline std::string to_string(const ComplexQ& z, bool standalone = false) {
  std::ostringstream os;
  const bool has_re = sgn(z.re) != 0;
  const bool has_im = sgn(z.im) != 0;
  auto imag_part = [](const Rational& im, bool leading) {
    std::string out;
    Rational mag = abs(im);
    if (sgn(im) < 0) out += leading ? "-" : " - ";
    else if (!leading) out += " + ";
    if (mag == 1) out += "i";
    else out += to_string(mag) + "*i";
    return out;
  };
  if (!has_re && !has_im) return "0";
  if (has_re && !has_im) return to_string(z.re);
  if (!has_re) return imag_part(z.im, true);
  os << (standalone ? "" : "(") << to_string(z.re) << imag_part(z.im, false) << (standalone ? "" : ")");
  return os.str();
}

/// Laurent polynomial in hbar with Gaussian-rational coefficients. Canonical:
/// no zero coefficients stored.
class ScalarH {
 public:
  using Terms = std::map<int, ComplexQ>;

  ScalarH() = default;
  ScalarH(ComplexQ c, int hbar_power = 0) {  // NOLINT
    if (!c.is_zero()) terms_.emplace(hbar_power, std::move(c));
  }
  ScalarH(Rational r) : ScalarH(ComplexQ(std::move(r))) {}  // NOLINT
  ScalarH(long r) : ScalarH(ComplexQ(Rational(r))) {}      // NOLINT

  static ScalarH hbar(int power = 1) { return {ComplexQ(Rational(1)), power}; }
  static ScalarH i() { return ComplexQ::i(); }
  static ScalarH i_hbar() { return {ComplexQ::i(), 1}; }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == ComplexQ(1);
  }
  [[nodiscard]] int min_hbar_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  [[nodiscard]] int max_hbar_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// Coefficient of hbar^n (zero when absent).
  [[nodiscard]] ComplexQ coefficient(int n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? ComplexQ{} : it->second;
  }

  void add_term(int power, const ComplexQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(power, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ScalarH& operator+=(const ScalarH& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
  }
  ScalarH& operator-=(const ScalarH& o) {
    for (const auto& [n, c] : o.terms_) add_term(n, -c);
    return *this;
  }
  ScalarH& operator*=(const ScalarH& o) { return *this = *this * o; }

  friend ScalarH operator+(ScalarH a, const ScalarH& b) { return a += b; }
  friend ScalarH operator-(ScalarH a, const ScalarH& b) { return a -= b; }
  friend ScalarH operator-(const ScalarH& a) {
    ScalarH out;
    for (const auto& [n, c] : a.terms_) out.terms_.emplace(n, -c);
    return out;
  }
  friend ScalarH operator*(const ScalarH& a, const ScalarH& b) {
    ScalarH out;
    for (const auto& [n, c] : a.terms_) {
      for (const auto& [m, d] : b.terms_) out.add_term(n + m, c * d);
    }
    return out;
  }
  friend bool operator==(const ScalarH& a, const ScalarH& b) { return a.terms_ == b.terms_; }

  /// Multiplies by c * hbar^shift.
  [[nodiscard]] ScalarH scaled(const ComplexQ& c, int shift = 0) const {
    ScalarH out;
    if (c.is_zero()) return out;
    for (const auto& [n, d] : terms_) out.terms_.emplace_hint(out.terms_.end(), n + shift, d * c);
    return out;
  }

  /// Keeps only the hbar^0 coefficient. Negative powers have no classical limit.
  [[nodiscard]] ScalarH classical_part() const {
    if (!terms_.empty() && terms_.begin()->first < 0) {
      throw DomainError("classical limit of a term with a negative power of hbar");
    }
    return ScalarH(coefficient(0));
  }

  /// Exact division by i*hbar; every term must carry at least one hbar.
  [[nodiscard]] ScalarH divided_by_ihbar() const {
    if (!terms_.empty() && terms_.begin()->first < 1) {
      throw DivisibilityError("term without an hbar factor cannot be divided by i*hbar");
    }
    return scaled(ComplexQ(Rational(0), Rational(-1)), -1);
  }

  /// Exact division by a single-term scalar c*hbar^k.
  [[nodiscard]] ScalarH divided_by_monomial(const ScalarH& d) const {
    if (d.terms_.size() != 1) throw DomainError("divisor must be a single hbar monomial");
    const auto& [k, c] = *d.terms_.begin();
    return scaled(ComplexQ(Rational(1)) / c, -k);
  }

  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
};

/// Canonical text: highest hbar power first, e.g. "1/2*i*hb^2 + 3/2".
inline std::string ScalarH::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int n = it->first;
    const ComplexQ& c = it->second;
    std::string coeff;
    bool negative = false;
    if (c.is_real() && sgn(c.re) < 0) {
      negative = true;
      coeff = to_string(ComplexQ(-c.re));
    } else if (sgn(c.re) == 0 && sgn(c.im) < 0) {
      negative = true;
      coeff = to_string(ComplexQ(Rational(0), -c.im));
    } else {
      coeff = to_string(c, false);
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    std::string hb;
    if (n == 1) hb = "hb";
    else if (n != 0) hb = "hb^" + std::to_string(n);
    if (hb.empty()) os << coeff;
    else if (coeff == "1") os << hb;
    else os << coeff << "*" << hb;
  }
  return os.str();
}

}  // namespace starprod
