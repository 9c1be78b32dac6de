#include "resint/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "resint/errors.hpp"

namespace resint {

bool less_eq(const GeneratorLabel& a, const GeneratorLabel& b) {
  if (a.is_q() && b.is_q()) return a.q <= b.q;
  if (a.is_q()) return a.q <= b.rows.back();
  if (b.is_q()) return false;
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t k = 0; k < a.rows.size(); ++k)
    if (a.rows[k] > b.rows[k]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(std::vector<std::string> names, const std::function<bool(std::size_t, std::size_t)>& leq)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq_[a][b] = leq(a, b);

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c) between = less(a, c) && less(c, b);
      if (!between) edges_.emplace_back(a, b);
    }

  // Elements with fewer strict predecessors come first: a topological order.
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (less(a, b)) ++below[b];
  std::vector<std::size_t> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::stable_sort(topo.begin(), topo.end(), [&](auto x, auto y) { return below[x] < below[y]; });

  std::vector<std::vector<std::size_t>> lower_covers(n);
  for (auto [a, b] : edges_) lower_covers[b].push_back(a);
  ranks_.assign(n, 1);
  for (auto v : topo)
    for (auto u : lower_covers[v]) ranks_[v] = std::max(ranks_[v], ranks_[u] + 1);
}

bool Poset::covers(std::size_t upper, std::size_t lower) const {
  return std::find(edges_.begin(), edges_.end(), Edge{lower, upper}) != edges_.end();
}

int Poset::poset_rank() const noexcept {
  return ranks_.empty() ? 0 : *std::max_element(ranks_.begin(), ranks_.end());
}

std::vector<int> Poset::ranks_by_recursion() const {
  std::vector<int> memo(size(), 0);
  auto rec = [&](auto&& self, std::size_t v) -> int {
    if (memo[v] != 0) return memo[v];
    int best = 0;
    for (std::size_t u = 0; u < size(); ++u)
      if (less(u, v)) best = std::max(best, self(self, u));
    return memo[v] = best + 1;
  };
  for (std::size_t v = 0; v < size(); ++v) rec(rec, v);
  return memo;
}

bool Poset::is_partial_order() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) return false;
    }
  }
  return true;
}

bool Poset::hasse_is_transitive_reduction() const {
  const std::size_t n = size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) reach[a][a] = true;
  for (auto [a, b] : edges_) reach[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (reach[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (reach[k][b]) reach[a][b] = true;
  return reach == leq_;
}

bool Poset::is_wonderful() const {
  // Extended poset: indices 0..n-1 as before, n = bottom, n+1 = top.
  const std::size_t n = size(), bottom = n, top = n + 1, total = n + 2;
  auto lt = [&](std::size_t a, std::size_t b) {
    if (a == b) return false;
    if (a == bottom || b == top) return true;
    if (a == top || b == bottom) return false;
    return less(a, b);
  };
  std::vector<std::vector<bool>> cov(total, std::vector<bool>(total, false));  // cov[lo][hi]
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      if (!lt(a, b)) continue;
      bool between = false;
      for (std::size_t c = 0; c < total && !between; ++c) between = lt(a, c) && lt(c, b);
      cov[a][b] = !between;
    }

  for (std::size_t alpha = 0; alpha < total; ++alpha) {
    if (alpha == top) continue;
    std::vector<std::size_t> up;
    for (std::size_t b = 0; b < total; ++b)
      if (cov[alpha][b]) up.push_back(b);
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        const std::size_t b1 = up[i], b2 = up[j];
        for (std::size_t gamma = 0; gamma < total; ++gamma) {
          if (gamma == bottom || !lt(b1, gamma) || !lt(b2, gamma)) continue;
          bool found = false;
          for (std::size_t beta = 0; beta < total && !found; ++beta)
            found = beta != bottom && (beta == gamma || lt(beta, gamma)) && cov[b1][beta] && cov[b2][beta];
          if (!found) return false;
        }
      }
  }
  return true;
}

std::string Poset::to_dot(const std::string& graph_name) const {
  std::string out = "digraph " + graph_name + " {\n  rankdir=TB;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<std::size_t>> levels;
  for (std::size_t v = 0; v < size(); ++v) levels[ranks_[v]].push_back(v);
  for (const auto& [r, vs] : levels) {
    out += "  { rank=same;";
    for (auto v : vs) out += " \"" + names_[v] + "\";";
    out += " }\n";
  }
  for (auto [a, b] : edges_) out += "  \"" + names_[a] + "\" -> \"" + names_[b] + "\";\n";
  return out + "}\n";
}

// ---------------------------------------------------------------------------
// B

std::size_t BPoset::index_of(const GeneratorLabel& label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) throw BadIndex("label " + label.to_string() + " is not in B");
  return static_cast<std::size_t>(it - labels.begin());
}

BPoset make_b_poset(int m, int n) {
  if (n < 1 || m < n) throw BadShape("need m >= n >= 1");
  auto labels = all_labels(m, n);
  std::vector<std::string> names;
  for (const auto& l : labels) names.push_back(l.to_string());
  Poset p(std::move(names), [&](std::size_t a, std::size_t b) { return less_eq(labels[a], labels[b]); });
  return BPoset{m, n, std::move(labels), std::move(p)};
}

std::vector<std::vector<GeneratorLabel>> rank_classes(const BPoset& b) {
  std::vector<std::vector<GeneratorLabel>> out(static_cast<std::size_t>(b.poset.poset_rank()));
  for (std::size_t v = 0; v < b.labels.size(); ++v)
    out[static_cast<std::size_t>(b.poset.rank(v) - 1)].push_back(b.labels[v]);
  return out;
}

std::vector<GeneratorLabel> witness_chain(int m, int n) {
  if (n < 2 || m < n) throw BadShape("witness chain needs m >= n >= 2");
  std::vector<GeneratorLabel> chain;
  for (int i = 1; i <= n; ++i) chain.push_back(GeneratorLabel::Q(i));
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 1);
  chain.push_back(GeneratorLabel::Minor(rows));
  for (int k = n - 1; k >= 0; --k) {
    const int cap = m - (n - 1 - k);
    while (rows[k] < cap) {
      ++rows[k];
      chain.push_back(GeneratorLabel::Minor(rows));
    }
  }
  return chain;
}

}  // namespace resint
