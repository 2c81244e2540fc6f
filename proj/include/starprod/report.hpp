#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "starprod/multivector.hpp"

namespace starprod {

struct CheckEntry {
  std::string label;
  bool passed = false;
  std::string detail;
};

/// Aggregate of identity checks; symbolic residuals must be exactly zero,
/// numeric ones must sit within their tolerance.
struct CheckReport {
  std::string title;
  std::vector<CheckEntry> entries;

  [[nodiscard]] bool ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
  }
  [[nodiscard]] std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.passed; }));
  }

  void add_zero(std::string label, const Multivector& residual) {
    const bool zero = residual.is_zero();
    entries.push_back({std::move(label), zero, zero ? "residual 0" : "residual " + residual.str()});
  }
  void add_true(std::string label, bool ok, std::string detail = {}) {
    entries.push_back({std::move(label), ok, std::move(detail)});
  }
  void add_within(std::string label, double error, double tolerance) {
    std::ostringstream os;
    os << "error " << error << " (tol " << tolerance << ")";
    entries.push_back({std::move(label), error <= tolerance, os.str()});
  }
  void append(const CheckReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
};

}  // namespace starprod
