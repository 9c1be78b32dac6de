#pragma once

#include <span>
#include <vector>

#include "resint/polynomial.hpp"

namespace resint {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// y[1..n] followed by x[1][1..n], ..., x[m][1..n].
std::vector<VariableId> generic_variables(int m, int n);

/// Ring of the generic m x n matrix X and column y (plus `extra` variables)
/// ordered by PaperLex.
RingPtr generic_ring(int m, int n, Field field = Field::rationals(),
                     std::vector<VariableId> extra = {});

/// The maximal minor of X on `rows` (strictly increasing, within 1..m, |rows| = n).
Polynomial minor(const RingPtr& ring, int m, int n, std::span<const int> rows);

/// Q_i = sum_j x[i][j] y[j].
Polynomial q_entry(const RingPtr& ring, int m, int n, int i);

/// Cofactor expansion along the first row; fine for the small sizes used here.
Polynomial determinant_laplace(const PolyMatrix& a);
/// Fraction-free Bareiss elimination with exact polynomial division.
Polynomial determinant_bareiss(const PolyMatrix& a);
/// Laplace for size <= 4, Bareiss beyond.
Polynomial determinant(const PolyMatrix& a);

/// The n x n submatrix of X on the given rows.
PolyMatrix submatrix(const RingPtr& ring, std::span<const int> rows, int n);

/// One signed product sign * Q_{q_row} * [minor_rows] in a last-column expansion.
struct Cofactor {
  int sign = 1;
  int q_row = 0;
  std::vector<int> minor_rows;
};

/// Expansion along the last column of the (n+1)x(n+1) determinant with rows
/// rows + {j} and columns [X | Xy]. The determinant vanishes identically.
struct CofactorExpansion {
  std::vector<int> rows;
  int j = 0;
  std::vector<Cofactor> terms;

  Polynomial expand(const RingPtr& ring, int m, int n) const;
};

/// Requires rows strictly increasing and j > rows.back() (NotIncomparable otherwise).
CofactorExpansion bordered_determinant(int m, int n, std::span<const int> rows, int j);

/// Same expansion for an arbitrary strictly increasing row list of size n+1.
CofactorExpansion last_column_expansion(int m, int n, std::span<const int> all_rows);

}  // namespace resint
