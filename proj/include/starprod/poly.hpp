#pragma once

// Commuting polynomials over ScalarH in the phase-space variables
// q^0..q^3 (upper index), p_0..p_3 (lower index) and the evolution parameter s.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starprod/scalar.hpp"

namespace starprod {

enum class Var : std::uint8_t { q0, q1, q2, q3, p0, p1, p2, p3, s };

inline constexpr int kNumVars = 9;

inline constexpr Var q_var(int mu) { return static_cast<Var>(mu); }
inline constexpr Var p_var(int mu) { return static_cast<Var>(4 + mu); }
inline constexpr int index_of(Var v) { return static_cast<int>(v); }

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {"q0", "q1", "q2", "q3", "p0",
                                                                       "p1", "p2", "p3", "s"};

inline std::string_view var_name(Var v) { return kVarNames[index_of(v)]; }

inline std::optional<Var> parse_var(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

using Exponents = std::array<std::uint16_t, kNumVars>;

class PhasePoly {
 public:
  using Terms = std::map<Exponents, ScalarH>;

  PhasePoly() = default;
  PhasePoly(ScalarH c) {  // NOLINT
    if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
  }
  PhasePoly(Rational r) : PhasePoly(ScalarH(std::move(r))) {}  // NOLINT
  PhasePoly(long r) : PhasePoly(ScalarH(r)) {}                 // NOLINT

  static PhasePoly variable(Var v, unsigned power = 1) {
    Exponents e{};
    e[index_of(v)] = static_cast<std::uint16_t>(power);
    return monomial(e, ScalarH(1));
  }
  static PhasePoly q(int mu) { return variable(q_var(mu)); }
  static PhasePoly p(int mu) { return variable(p_var(mu)); }
  static PhasePoly monomial(const Exponents& e, ScalarH c) {
    PhasePoly out;
    out.add_term(e, std::move(c));
    return out;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// True when the polynomial does not depend on any variable.
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }
  [[nodiscard]] ScalarH constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? ScalarH{} : it->second;
  }

  [[nodiscard]] int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (auto x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  void add_term(const Exponents& e, const ScalarH& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PhasePoly& operator+=(const PhasePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PhasePoly& operator-=(const PhasePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  PhasePoly& operator*=(const PhasePoly& o) { return *this = *this * o; }

  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator-(const PhasePoly& a) {
    PhasePoly out;
    for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
  }
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
    PhasePoly out;
    for (const auto& [e, c] : a.terms_) {
      for (const auto& [f, d] : b.terms_) {
        Exponents g;
        for (int i = 0; i < kNumVars; ++i) g[i] = static_cast<std::uint16_t>(e[i] + f[i]);
        out.add_term(g, c * d);
      }
    }
    return out;
  }
  friend bool operator==(const PhasePoly& a, const PhasePoly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] PhasePoly scaled(const ScalarH& c) const {
    PhasePoly out;
    if (c.is_zero()) return out;
    for (const auto& [e, d] : terms_) out.add_term(e, d * c);
    return out;
  }

  [[nodiscard]] PhasePoly pow(unsigned n) const {
    PhasePoly out(1L);
    for (unsigned k = 0; k < n; ++k) out *= *this;
    return out;
  }

  /// Formal partial derivative.
  [[nodiscard]] PhasePoly partial(Var v) const {
    const int k = index_of(v);
    PhasePoly out;
    for (const auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      Exponents f = e;
      f[k] = static_cast<std::uint16_t>(e[k] - 1);
      out.add_term(f, c.scaled(ComplexQ(Rational(e[k]))));
    }
    return out;
  }

  /// Replaces every occurrence of `v` by `value`.
  [[nodiscard]] PhasePoly substitute(Var v, const PhasePoly& value) const {
    const int k = index_of(v);
    PhasePoly out;
    std::vector<PhasePoly> powers{PhasePoly(1L)};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[k]) powers.push_back(powers.back() * value);
      Exponents rest = e;
      rest[k] = 0;
      out += monomial(rest, c) * powers[e[k]];
    }
    return out;
  }

  [[nodiscard]] PhasePoly classical_part() const {
    PhasePoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c.classical_part());
    return out;
  }

  [[nodiscard]] PhasePoly divided_by_ihbar() const {
    PhasePoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c.divided_by_ihbar());
    return out;
  }

  [[nodiscard]] PhasePoly divided_by_monomial(const ScalarH& d) const {
    PhasePoly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c.divided_by_monomial(d));
    return out;
  }

  /// Evaluation at a numeric point (hbar supplied explicitly).
  [[nodiscard]] std::complex<double> evaluate(const std::array<double, kNumVars>& point,
                                              double hbar = 0.0) const {
    std::complex<double> total{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
      std::complex<double> coeff{0.0, 0.0};
      for (const auto& [n, z] : c.terms()) {
        coeff += std::complex<double>(z.re.get_d(), z.im.get_d()) * std::pow(hbar, n);
      }
      double m = 1.0;
      for (int i = 0; i < kNumVars; ++i) {
        for (int j = 0; j < e[i]; ++j) m *= point[i];
      }
      total += coeff * m;
    }
    return total;
  }

  /// Monomial text for exponents, e.g. "q1^2*p0"; empty for the unit monomial.
  static std::string monomial_str(const Exponents& e) {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += kVarNames[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  [[nodiscard]] std::string str() const;

 private:
  Terms terms_;
};

/// Text form of "coefficient times monomial" with the conventions of the
/// canonical printer. Returns the sign separately so callers can join terms.
inline std::pair<bool, std::string> term_text(const ScalarH& c, const std::string& monomial) {
  bool negative = false;
  std::string coeff;
  const auto& t = c.terms();
  if (t.size() == 1 && t.begin()->first == 0) {
    const ComplexQ& z = t.begin()->second;
    if (z.is_real()) {
      negative = sgn(z.re) < 0;
      coeff = to_string(ComplexQ(abs(z.re)));
    } else if (sgn(z.re) == 0) {
      negative = sgn(z.im) < 0;
      coeff = to_string(ComplexQ(Rational(0), abs(z.im)));
    } else {
      coeff = to_string(z, false);
    }
  } else if (t.size() == 1) {
    // single hbar power: pull a leading minus out of real or imaginary coefficients
    const ComplexQ& z = t.begin()->second;
    if ((z.is_real() && sgn(z.re) < 0) || (sgn(z.re) == 0 && sgn(z.im) < 0)) {
      negative = true;
      coeff = (-c).str();
    } else {
      coeff = c.str();
    }
  } else {
    coeff = "(" + c.str() + ")";
  }
  if (monomial.empty()) return {negative, coeff};
  if (coeff == "1") return {negative, monomial};
  return {negative, coeff + "*" + monomial};
}

inline std::string PhasePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    auto [negative, text] = term_text(c, monomial_str(e));
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    os << text;
    first = false;
  }
  return os.str();
}

}  // namespace starprod
