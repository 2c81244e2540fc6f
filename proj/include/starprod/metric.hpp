#pragma once

#include <array>
#include <string>
#include <string_view>

#include "starprod/errors.hpp"

namespace starprod {

enum class Signature { standard, nonstandard };

/// Diagonal Lorentz metric. standard = diag(+,-,-,-), nonstandard = diag(-,+,+,+).
/// The metric is its own inverse, so eta(mu,nu) serves for both index placements.
class Metric {
 public:
  constexpr Metric(Signature s = Signature::nonstandard) : signature_(s) {}  // NOLINT

  static constexpr Metric standard() { return Metric(Signature::standard); }
  static constexpr Metric nonstandard() { return Metric(Signature::nonstandard); }

  [[nodiscard]] constexpr Signature signature() const { return signature_; }

  /// Diagonal entry eta(mu,mu).
  [[nodiscard]] constexpr int diag(int mu) const {
    const bool time = (mu == 0);
    return (signature_ == Signature::standard) == time ? 1 : -1;
  }
  [[nodiscard]] constexpr int operator()(int mu, int nu) const { return mu == nu ? diag(mu) : 0; }

  [[nodiscard]] std::string_view name() const {
    return signature_ == Signature::standard ? "standard" : "nonstandard";
  }

  friend constexpr bool operator==(Metric a, Metric b) { return a.signature_ == b.signature_; }

 private:
  Signature signature_;
};

inline Metric parse_metric(std::string_view text) {
  if (text == "standard") return Metric::standard();
  if (text == "nonstandard") return Metric::nonstandard();
  throw DomainError("unknown metric '" + std::string(text) + "' (expected standard|nonstandard)");
}

}  // namespace starprod
