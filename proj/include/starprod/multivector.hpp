#pragma once

// Grassmann multivectors over the four generators gamma_0..gamma_3 with
// polynomial coefficients. Blades are stored as bit masks; the Grassmann
// (exterior) product is the undeformed product of the algebra.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "starprod/poly.hpp"

namespace starprod {

class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint8_t mask) : mask_(mask & 0xF) {}

  /// Blade from strictly ascending indices; throws on repeats or bad order.
  static Blade from_indices(std::initializer_list<int> idx) { return from_indices(std::vector<int>(idx)); }
  static Blade from_indices(const std::vector<int>& idx) {
    std::uint8_t m = 0;
    int last = -1;
    for (int i : idx) {
      if (i < 0 || i > 3) throw DomainError("blade index out of range 0..3");
      if (i <= last) throw DomainError("blade indices must be strictly ascending");
      m = static_cast<std::uint8_t>(m | (1u << i));
      last = i;
    }
    return Blade(m);
  }
  static constexpr Blade scalar() { return Blade(0); }
  static constexpr Blade gamma(int mu) { return Blade(static_cast<std::uint8_t>(1u << mu)); }
  static constexpr Blade pseudoscalar() { return Blade(0xF); }

  [[nodiscard]] constexpr std::uint8_t mask() const { return mask_; }
  [[nodiscard]] constexpr int grade() const { return std::popcount(static_cast<unsigned>(mask_)); }
  [[nodiscard]] constexpr bool contains(int mu) const { return ((mask_ >> mu) & 1u) != 0; }

  [[nodiscard]] std::vector<int> indices() const {
    std::vector<int> out;
    for (int mu = 0; mu < 4; ++mu) {
      if (contains(mu)) out.push_back(mu);
    }
    return out;
  }

  /// Position of gamma_mu counted from the left (number of smaller indices).
  [[nodiscard]] constexpr int position(int mu) const {
    return std::popcount(static_cast<unsigned>(mask_ & ((1u << mu) - 1u)));
  }

  /// Ordering by grade, then lexicographically by index set.
  friend constexpr std::strong_ordering operator<=>(Blade a, Blade b) {
    if (auto c = a.grade() <=> b.grade(); c != 0) return c;
    for (int mu = 0; mu < 4; ++mu) {
      const bool x = a.contains(mu);
      const bool y = b.contains(mu);
      if (x != y) return x ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(Blade a, Blade b) { return a.mask_ == b.mask_; }

  /// "g0g1"; empty for the scalar blade.
  [[nodiscard]] std::string str() const {
    std::string out;
    for (int mu = 0; mu < 4; ++mu) {
      if (contains(mu)) out += "g" + std::to_string(mu);
    }
    return out;
  }

 private:
  std::uint8_t mask_ = 0;
};

/// All 16 blades in canonical order.
inline const std::array<Blade, 16>& all_blades() {
  static const std::array<Blade, 16> blades = [] {
    std::array<Blade, 16> b;
    for (int m = 0; m < 16; ++m) b[m] = Blade(static_cast<std::uint8_t>(m));
    std::sort(b.begin(), b.end());
    return b;
  }();
  return blades;
}

/// Sign of the exterior product of two disjoint blades (0 when they overlap).
inline constexpr int wedge_sign(Blade a, Blade b) {
  if ((a.mask() & b.mask()) != 0) return 0;
  int swaps = 0;
  for (int j = 0; j < 4; ++j) {
    if (b.contains(j)) {
      // generators of a with index greater than j must hop over gamma_j
      swaps += std::popcount(static_cast<unsigned>(a.mask() >> (j + 1)));
    }
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

class Multivector {
 public:
  using Components = std::map<Blade, PhasePoly>;

  Multivector() = default;
  Multivector(PhasePoly c) {  // NOLINT
    if (!c.is_zero()) comps_.emplace(Blade::scalar(), std::move(c));
  }
  Multivector(ScalarH c) : Multivector(PhasePoly(std::move(c))) {}  // NOLINT
  Multivector(Rational r) : Multivector(PhasePoly(std::move(r))) {}  // NOLINT
  Multivector(long r) : Multivector(PhasePoly(r)) {}                 // NOLINT

  static Multivector blade(Blade b, PhasePoly coeff = PhasePoly(1L)) {
    Multivector out;
    out.add(b, coeff);
    return out;
  }
  static Multivector gamma(int mu) { return blade(Blade::gamma(mu)); }
  static Multivector pseudoscalar() { return blade(Blade::pseudoscalar()); }
  static Multivector var(Var v) { return Multivector(PhasePoly::variable(v)); }
  static Multivector q(int mu) { return var(q_var(mu)); }
  static Multivector p(int mu) { return var(p_var(mu)); }
  static Multivector hbar() { return Multivector(ScalarH::hbar()); }
  static Multivector i() { return Multivector(ScalarH::i()); }

  [[nodiscard]] const Components& components() const { return comps_; }
  [[nodiscard]] bool is_zero() const { return comps_.empty(); }

  [[nodiscard]] PhasePoly component(Blade b) const {
    auto it = comps_.find(b);
    return it == comps_.end() ? PhasePoly{} : it->second;
  }

  void add(Blade b, const PhasePoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  /// True when every occupied blade has grade n (vacuously for zero).
  [[nodiscard]] bool is_grade(int n) const {
    return std::all_of(comps_.begin(), comps_.end(), [n](const auto& kv) { return kv.first.grade() == n; });
  }
  [[nodiscard]] bool is_scalar() const { return is_grade(0); }

  /// True when every coefficient is independent of q, p and s.
  [[nodiscard]] bool has_constant_coefficients() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const auto& kv) { return kv.second.is_constant(); });
  }

  Multivector& operator+=(const Multivector& o) {
    for (const auto& [b, c] : o.comps_) add(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (const auto& [b, c] : o.comps_) add(b, -c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(const Multivector& a) {
    Multivector out;
    for (const auto& [b, c] : a.comps_) out.comps_.emplace_hint(out.comps_.end(), b, -c);
    return out;
  }
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.comps_ == b.comps_; }

  /// Multiplication by a commuting coefficient.
  [[nodiscard]] Multivector scaled(const PhasePoly& c) const {
    Multivector out;
    for (const auto& [b, d] : comps_) out.add(b, d * c);
    return out;
  }
  [[nodiscard]] Multivector scaled(const ScalarH& c) const {
    Multivector out;
    for (const auto& [b, d] : comps_) out.add(b, d.scaled(c));
    return out;
  }

  /// Applies `f` to every coefficient, dropping blades that become zero.
  template <typename F>
  [[nodiscard]] Multivector map_coefficients(F&& f) const {
    Multivector out;
    for (const auto& [b, c] : comps_) out.add(b, f(c));
    return out;
  }

  [[nodiscard]] std::string str() const;

 private:
  Components comps_;
};

/// Undeformed exterior product; coefficients multiply pointwise.
inline Multivector grassmann_mul(const Multivector& a, const Multivector& b) {
  Multivector out;
  for (const auto& [ba, ca] : a.components()) {
    for (const auto& [bb, cb] : b.components()) {
      const int sign = wedge_sign(ba, bb);
      if (sign == 0) continue;
      PhasePoly prod = ca * cb;
      out.add(Blade(static_cast<std::uint8_t>(ba.mask() | bb.mask())), sign > 0 ? prod : -prod);
    }
  }
  return out;
}

inline Multivector grade_project(const Multivector& a, int n) {
  if (n < 0 || n > 4) throw DomainError("grade must lie in 0..4, got " + std::to_string(n));
  Multivector out;
  for (const auto& [b, c] : a.components()) {
    if (b.grade() == n) out.add(b, c);
  }
  return out;
}

inline Multivector partial(const Multivector& f, Var v) {
  return f.map_coefficients([v](const PhasePoly& c) { return c.partial(v); });
}

/// Left derivative d/dgamma_mu acting from the left: gamma_mu is anticommuted
/// to the front of each blade, then removed.
inline Multivector grassmann_partial_left(const Multivector& a, int mu) {
  if (mu < 0 || mu > 3) throw DomainError("generator index must lie in 0..3");
  Multivector out;
  for (const auto& [b, c] : a.components()) {
    if (!b.contains(mu)) continue;
    const int k = b.position(mu);
    const Blade rest(static_cast<std::uint8_t>(b.mask() & ~(1u << mu)));
    out.add(rest, k % 2 == 0 ? c : -c);
  }
  return out;
}

/// Right derivative: gamma_mu is anticommuted to the back of each blade, then removed.
inline Multivector grassmann_partial_right(const Multivector& a, int mu) {
  if (mu < 0 || mu > 3) throw DomainError("generator index must lie in 0..3");
  Multivector out;
  for (const auto& [b, c] : a.components()) {
    if (!b.contains(mu)) continue;
    const int k = b.grade() - 1 - b.position(mu);
    const Blade rest(static_cast<std::uint8_t>(b.mask() & ~(1u << mu)));
    out.add(rest, k % 2 == 0 ? c : -c);
  }
  return out;
}

/// Drops every term carrying a positive power of hbar.
inline Multivector hbar_set_zero(const Multivector& a) {
  return a.map_coefficients([](const PhasePoly& c) { return c.classical_part(); });
}

inline Multivector divide_by_ihbar(const Multivector& a) {
  return a.map_coefficients([](const PhasePoly& c) { return c.divided_by_ihbar(); });
}

inline std::string Multivector::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, poly] : comps_) {
    const std::string blade = b.str();
    for (const auto& [e, c] : poly.terms()) {
      std::string mono = PhasePoly::monomial_str(e);
      if (!blade.empty()) mono = mono.empty() ? blade : mono + "*" + blade;
      auto [negative, text] = term_text(c, mono);
      if (first) os << (negative ? "-" : "");
      else os << (negative ? " - " : " + ");
      os << text;
      first = false;
    }
  }
  return os.str();
}

}  // namespace starprod
