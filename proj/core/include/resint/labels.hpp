#pragma once

#include <compare>
#include <string>
#include <vector>

namespace resint {

/// Name of an algebra generator: Q(i) or the maximal minor on a row set.
struct GeneratorLabel {
  enum class Kind { Q = 0, Minor = 1 };

  Kind kind = Kind::Q;
  int q = 0;              // row index when kind == Q
  std::vector<int> rows;  // strictly increasing when kind == Minor

  static GeneratorLabel Q(int i) { return {Kind::Q, i, {}}; }
  static GeneratorLabel Minor(std::vector<int> rows) { return {Kind::Minor, 0, std::move(rows)}; }

  bool is_q() const noexcept { return kind == Kind::Q; }
  bool is_minor() const noexcept { return kind == Kind::Minor; }

  /// "Q3" or "[1,2]".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed input.
  static GeneratorLabel parse(const std::string& text);

  /// Canonical order: all Q's by index, then minors lexicographically.
  friend auto operator<=>(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// The m + C(m,n) labels for fixed (m,n) in canonical order.
std::vector<GeneratorLabel> all_labels(int m, int n);

}  // namespace resint
