#pragma once

// Exact dense linear algebra over Q and Z. Matrices are row-major vectors of
// rows; sizes are desk-scale, so everything is plain Gaussian elimination.

#include <optional>
#include <utility>

#include "horo/rational.hpp"

namespace horo::linalg {

struct Rref {
  QMat rows;                         // nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
};

inline Rref rref(QMat m, std::size_t ncols) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const QMat& m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).pivots.size();
}

inline Rational det(QMat m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return d;
}

// Basis of {x : m x = 0}.
inline QMat nullspace(const QMat& m, std::size_t ncols) {
  Rref r = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves a x = b for a with full column rank; nullopt if inconsistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.empty()) return QVec{};
  const std::size_t n = a.front().size();
  QMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Rref r = rref(std::move(aug), n + 1);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
  if (r.pivots.size() != n) throw InternalError("solve: matrix lacks full column rank");
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[r.pivots[i]] = r.rows[i][n];
  return x;
}

// Coefficients of v in the columns of `cols` (given as a list of column
// vectors), or nullopt when v is outside their span.
inline std::optional<QVec> coordinates_in(const QMat& cols, const QVec& v) {
  if (cols.empty()) {
    if (is_zero(v)) return QVec{};
    return std::nullopt;
  }
  QMat a(v.size(), QVec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) a[i][j] = cols[j][i];
  return solve(a, v);
}

inline bool in_span(const QMat& vectors, const QVec& v) {
  return coordinates_in(vectors, v).has_value();
}

// Scales a rational row to a primitive integer row with the same sign.
inline ZVec primitive_integer_row(const QVec& v) {
  Integer l = lcm_of_denominators(v);
  ZVec z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : z) x /= g;
  return z;
}

// Basis of the integer kernel {c in Z^n : m c = 0}, via unimodular column
// operations bringing m to column echelon form.
inline std::vector<ZVec> integer_kernel(std::vector<ZVec> m, std::size_t n) {
  std::vector<ZVec> u(n, ZVec(n, Integer(0)));  // u[j] is column j
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
  auto col_op = [&](std::size_t c, std::size_t j, const Integer& s, const Integer& t, const Integer& a,
                    const Integer& b) {
    // (C_c, C_j) <- (s C_c + t C_j, -b C_c + a C_j); determinant s a + t b = 1.
    for (auto& row : m) {
      Integer x = row[c], y = row[j];
      row[c] = s * x + t * y;
      row[j] = -b * x + a * y;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Integer x = u[c][i], y = u[j][i];
      u[c][i] = s * x + t * y;
      u[j][i] = -b * x + a * y;
    }
  };
  std::size_t col = 0;
  for (std::size_t i = 0; i < m.size() && col < n; ++i) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (m[i][j] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[i][col].get_mpz_t(), m[i][j].get_mpz_t());
      Integer a = m[i][col] / g, b = m[i][j] / g;
      col_op(col, j, s, t, a, b);
    }
    if (m[i][col] != 0) ++col;
  }
  return {u.begin() + static_cast<std::ptrdiff_t>(col), u.end()};
}

}  // namespace horo::linalg
