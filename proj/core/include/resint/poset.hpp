#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "resint/labels.hpp"

namespace resint {

/// Q_i ≤ Q_j iff i ≤ j; Q_j ≤ [i..] iff j ≤ last row; minors componentwise.
/// A minor is never below a Q.
bool less_eq(const GeneratorLabel& a, const GeneratorLabel& b);
inline bool comparable(const GeneratorLabel& a, const GeneratorLabel& b) {
  return less_eq(a, b) || less_eq(b, a);
}

/// Finite poset on indices 0..size()-1 with display names.
class Poset {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Poset(std::vector<std::string> names, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }

  /// Cover pairs (a, b): a < b and nothing strictly between.
  const std::vector<Edge>& hasse_edges() const noexcept { return edges_; }
  bool covers(std::size_t upper, std::size_t lower) const;

  /// Longest chain ending at each element, counted in elements.
  const std::vector<int>& ranks() const noexcept { return ranks_; }
  int rank(std::size_t i) const { return ranks_[i]; }
  int poset_rank() const noexcept;
  /// Same quantity from 1 + max over all strict predecessors, memoized.
  std::vector<int> ranks_by_recursion() const;

  /// Reflexivity, antisymmetry and transitivity of the stored relation.
  bool is_partial_order() const;
  /// Transitive closure of the cover relation equals the order relation.
  bool hasse_is_transitive_reduction() const;
  /// Wonderful condition on the poset with a bottom and a top adjoined.
  bool is_wonderful() const;

  /// DOT graph, smaller elements drawn above larger ones.
  std::string to_dot(const std::string& graph_name = "B") const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
  std::vector<Edge> edges_;
  std::vector<int> ranks_;
};

/// The poset structure on the labels of B for (m, n).
struct BPoset {
  int m = 0;
  int n = 0;
  std::vector<GeneratorLabel> labels;
  Poset poset;

  std::size_t index_of(const GeneratorLabel& label) const;
  int rank(const GeneratorLabel& label) const { return poset.rank(index_of(label)); }
};

BPoset make_b_poset(int m, int n);

/// Labels of one rank class, canonical order; classes 1..poset_rank.
std::vector<std::vector<GeneratorLabel>> rank_classes(const BPoset& b);

/// Maximal chain Q1 < ... < Qn < [1..n] < ... < [m-n+1..m], raising the
/// last row index first. Requires n >= 2.
std::vector<GeneratorLabel> witness_chain(int m, int n);

}  // namespace resint
