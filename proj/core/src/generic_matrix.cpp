#include "resint/generic_matrix.hpp"

#include <algorithm>
#include <string>

#include "resint/errors.hpp"

namespace resint {

std::vector<VariableId> generic_variables(int m, int n) {
  std::vector<VariableId> vars;
  for (int j = 1; j <= n; ++j) vars.push_back(VariableId::Y(j));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) vars.push_back(VariableId::X(i, j));
  return vars;
}

RingPtr generic_ring(int m, int n, Field field, std::vector<VariableId> extra) {
  if (m < 1 || n < 1) throw BadShape("matrix dimensions must be positive");
  auto vars = generic_variables(m, n);
  vars.insert(vars.end(), extra.begin(), extra.end());
  return Ring::make(vars, field, MonomialOrder::paper_lex(vars));
}

namespace {

void check_rows(int m, int n, std::span<const int> rows) {
  if (static_cast<int>(rows.size()) != n)
    throw BadRowSet("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] < 1 || rows[k] > m) throw BadRowSet("row " + std::to_string(rows[k]) + " out of range");
    if (k > 0 && rows[k] <= rows[k - 1]) throw BadRowSet("rows must be strictly increasing");
  }
}

}  // namespace

PolyMatrix submatrix(const RingPtr& ring, std::span<const int> rows, int n) {
  PolyMatrix a;
  for (int r : rows) {
    std::vector<Polynomial> row;
    for (int c = 1; c <= n; ++c) row.push_back(Polynomial::variable(ring, VariableId::X(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

Polynomial minor(const RingPtr& ring, int m, int n, std::span<const int> rows) {
  check_rows(m, n, rows);
  return determinant(submatrix(ring, rows, n));
}

Polynomial q_entry(const RingPtr& ring, int m, int n, int i) {
  if (i < 1 || i > m) throw BadIndex("Q index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  Polynomial q(ring);
  for (int j = 1; j <= n; ++j)
    q += Polynomial::variable(ring, VariableId::X(i, j)) * Polynomial::variable(ring, VariableId::Y(j));
  return q;
}

Polynomial determinant_laplace(const PolyMatrix& a) {
  const std::size_t size = a.size();
  if (size == 0) throw std::invalid_argument("empty matrix");
  if (size == 1) return a[0][0];
  if (size == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  Polynomial det(a[0][0].ring());
  for (std::size_t col = 0; col < size; ++col) {
    if (a[0][col].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t r = 1; r < size; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < size; ++c)
        if (c != col) row.push_back(a[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = a[0][col] * determinant_laplace(sub);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

Polynomial determinant_bareiss(const PolyMatrix& input) {
  PolyMatrix a = input;
  const std::size_t size = a.size();
  if (size == 0) throw std::invalid_argument("empty matrix");
  const RingPtr& ring = a[0][0].ring();
  Polynomial prev = Polynomial::constant(ring, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < size && a[swap][k].is_zero()) ++swap;
      if (swap == size) return Polynomial(ring);
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
    }
    prev = a[k][k];
  }
  Polynomial det = a[size - 1][size - 1];
  return negate ? -det : det;
}

Polynomial determinant(const PolyMatrix& a) {
  return a.size() <= 4 ? determinant_laplace(a) : determinant_bareiss(a);
}

CofactorExpansion last_column_expansion(int m, int n, std::span<const int> all_rows) {
  check_rows(m, n + 1, all_rows);
  CofactorExpansion out;
  out.rows.assign(all_rows.begin(), all_rows.end() - 1);
  out.j = all_rows.back();
  // Entry (r, n+1) of an (n+1)-square matrix carries sign (-1)^(r + n + 1), r 1-based.
  for (int r = 1; r <= n + 1; ++r) {
    Cofactor c;
    c.sign = (r + n + 1) % 2 == 0 ? 1 : -1;
    c.q_row = all_rows[r - 1];
    for (int k = 1; k <= n + 1; ++k)
      if (k != r) c.minor_rows.push_back(all_rows[k - 1]);
    out.terms.push_back(std::move(c));
  }
  return out;
}

CofactorExpansion bordered_determinant(int m, int n, std::span<const int> rows, int j) {
  check_rows(m, n, rows);
  if (j <= rows.back())
    throw NotIncomparable("Q_" + std::to_string(j) + " is comparable with the minor");
  if (j > m) throw BadRowSet("row " + std::to_string(j) + " out of range");
  std::vector<int> all(rows.begin(), rows.end());
  all.push_back(j);
  return last_column_expansion(m, n, all);
}

Polynomial CofactorExpansion::expand(const RingPtr& ring, int m, int n) const {
  Polynomial sum(ring);
  for (const auto& t : terms) {
    Polynomial prod = q_entry(ring, m, n, t.q_row) * minor(ring, m, n, t.minor_rows);
    if (t.sign > 0)
      sum += prod;
    else
      sum -= prod;
  }
  return sum;
}

}  // namespace resint
