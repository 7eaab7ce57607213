#pragma once

// Gelfand-Cetlin polytopes for GL(n) and Newton polytopes lifted over a
// chamber face.
//
// Pattern coordinates: entry x(r, c) for rows r = n-1 down to 1 and columns
// c = 1..r, stored row-major with the top row first. Row n is the weight.
// Interlacing: x(r+1, c) >= x(r, c) >= x(r+1, c+1).

#include "horo/geometry.hpp"
#include "horo/weyl.hpp"

namespace horo {

inline std::size_t gt_size(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

// Position of x(r, c), 1 <= c <= r <= n-1.
inline std::size_t gt_index(int n, int r, int c) {
  std::size_t above = 0;
  for (int row = n - 1; row > r; --row) above += static_cast<std::size_t>(row);
  return above + static_cast<std::size_t>(c - 1);
}

namespace detail {

inline bool non_increasing(const QVec& l) {
  for (std::size_t i = 0; i + 1 < l.size(); ++i)
    if (l[i] < l[i + 1]) return false;
  return true;
}

// Interlacing system rows . x <= rhs over the pattern coordinates.
inline void gt_inequalities(int n, const QVec& lambda, QMat& rows, QVec& rhs) {
  const std::size_t dim = gt_size(n);
  auto coord = [&](int r, int c, QVec& row, Rational& bound, int sign) {
    if (r == n)
      bound -= sign * lambda[static_cast<std::size_t>(c - 1)];
    else
      row[gt_index(n, r, c)] += sign;
  };
  for (int r = n - 1; r >= 1; --r) {
    for (int c = 1; c <= r; ++c) {
      // x(r,c) - x(r+1,c) <= 0
      QVec up(dim, Rational(0));
      Rational b_up = 0;
      coord(r, c, up, b_up, 1);
      coord(r + 1, c, up, b_up, -1);
      rows.push_back(std::move(up));
      rhs.push_back(b_up);
      // x(r+1,c+1) - x(r,c) <= 0
      QVec lo(dim, Rational(0));
      Rational b_lo = 0;
      coord(r + 1, c + 1, lo, b_lo, 1);
      coord(r, c, lo, b_lo, -1);
      rows.push_back(std::move(lo));
      rhs.push_back(b_lo);
    }
  }
}

// Vertices of the GC polytope via its H-description; works for rational
// dominant weights.
inline Polytope gt_polytope_q(int n, const QVec& lambda) {
  if (n < 1 || lambda.size() != static_cast<std::size_t>(n)) throw DomainError("GC polytope: weight length must be n");
  if (!non_increasing(lambda)) throw DomainError("GC polytope: weight is not dominant");
  if (n == 1) return Polytope::point(QVec{});
  QMat rows;
  QVec rhs;
  gt_inequalities(n, lambda, rows, rhs);
  return from_inequalities(rows, rhs, gt_size(n));
}

}  // namespace detail

struct GTPolytope {
  int n = 0;
  Weight weight;
  Polytope polytope;

  bool contains(const QVec& x) const {
    if (x.size() != gt_size(n)) return false;
    QMat rows;
    QVec rhs;
    detail::gt_inequalities(n, to_qvec(weight), rows, rhs);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (dot(rows[i], x) > rhs[i]) return false;
    return true;
  }
};

inline GTPolytope gt_polytope(int n, const Weight& lambda) {
  return {n, lambda, detail::gt_polytope_q(n, to_qvec(lambda))};
}

// Number of integral patterns, by row-by-row enumeration.
inline Integer gt_lattice_count(int n, const Weight& lambda) {
  if (n < 1 || lambda.size() != static_cast<std::size_t>(n)) throw DomainError("GC count: weight length must be n");
  if (!detail::non_increasing(to_qvec(lambda))) throw DomainError("GC count: weight is not dominant");
  std::map<Weight, Integer> memo;
  auto count = [&](auto&& self, const Weight& row) -> Integer {
    if (row.size() <= 1) return 1;
    if (auto it = memo.find(row); it != memo.end()) return it->second;
    Integer total = 0;
    Weight next(row.size() - 1);
    auto fill = [&](auto&& fill_self, std::size_t c) -> void {
      if (c == next.size()) {
        total += self(self, next);
        return;
      }
      for (int64_t v = row[c + 1]; v <= row[c]; ++v) {
        next[c] = v;
        fill_self(fill_self, c + 1);
      }
    };
    fill(fill, 0);
    memo.emplace(row, total);
    return total;
  };
  return count(count, lambda);
}

// Entries x(r, c) of a GL(n) factor forced by the face: both ends of the
// interlacing squeeze, lambda_c and lambda_{c+n-r}, lie in one block.
// Indexed by pattern position; `offset` is the factor's first weight
// coordinate.
inline std::vector<bool> gt_forced_mask(const ChamberFace& face, std::size_t factor) {
  const auto& g = face.group();
  const int n = g.gl_factors().at(factor);
  const std::size_t o = g.gl_offset(factor);
  std::vector<bool> forced(gt_size(n), false);
  for (int r = n - 1; r >= 1; --r)
    for (int c = 1; c <= r; ++c)
      forced[gt_index(n, r, c)] = face.block_of(o + static_cast<std::size_t>(c - 1)) ==
                                  face.block_of(o + static_cast<std::size_t>(c - 1 + n - r));
  return forced;
}

// Weight coordinate (within the factor, 0-based) that a forced entry equals.
inline std::size_t gt_forced_source(int n, std::size_t pos) {
  for (int r = n - 1; r >= 1; --r)
    for (int c = 1; c <= r; ++c)
      if (gt_index(n, r, c) == pos) return static_cast<std::size_t>(c - 1);
  throw InternalError("gt_forced_source: position out of range");
}

// Coordinates of the lift space: block coordinates of the face, then the
// pattern coordinates of each GL factor in declaration order.
inline std::size_t lift_dim(const ChamberFace& face) {
  std::size_t d = face.dim();
  for (int n : face.group().gl_factors()) d += gt_size(n);
  return d;
}

// {(c, x) : c in delta, x in product of GC(lambda(c))}, with delta given in
// block coordinates. The GC polytope depends linearly on the weight, so the
// lift is the hull of the fibres over the vertices of delta.
inline Polytope newton_lift(const ChamberFace& face, const Polytope& delta) {
  if (delta.ambient_dim() != face.dim()) throw DomainError("newton_lift: polytope is not in block coordinates");
  const auto& g = face.group();
  std::vector<QVec> points;
  for (const auto& v : delta.vertices()) {
    if (!face.contains_block_coords(v)) throw DomainError("newton_lift: polytope is not contained in the face");
    QVec w = face.from_block_coords(v);
    std::vector<QVec> partial{v};
    for (std::size_t f = 0; f < g.gl_factors().size(); ++f) {
      const int n = g.gl_factors()[f];
      const std::size_t o = g.gl_offset(f);
      QVec lf(w.begin() + static_cast<std::ptrdiff_t>(o), w.begin() + static_cast<std::ptrdiff_t>(o) + n);
      Polytope gc = detail::gt_polytope_q(n, lf);
      std::vector<QVec> grown;
      for (const auto& base : partial) {
        for (const auto& x : gc.vertices()) {
          QVec y = base;
          y.insert(y.end(), x.begin(), x.end());
          grown.push_back(std::move(y));
        }
      }
      partial = std::move(grown);
    }
    points.insert(points.end(), partial.begin(), partial.end());
  }
  return Polytope::hull(points);
}

// Lattice normalizing volumes of lifts: each basis vector u of lambda_h
// (weight coordinates) becomes (u in block coordinates, forced entries of u,
// 0 on free entries), and every free pattern entry contributes a unit vector.
inline AffineLattice lift_lattice(const ChamberFace& face, const AffineLattice& lambda_h) {
  const auto& g = face.group();
  if (lambda_h.ambient_dim() != static_cast<std::size_t>(g.rank()))
    throw DomainError("lift_lattice: Lambda(H) has wrong ambient dimension");
  const std::size_t dim = lift_dim(face);
  std::vector<std::vector<bool>> forced;
  for (std::size_t f = 0; f < g.gl_factors().size(); ++f) forced.push_back(gt_forced_mask(face, f));

  std::vector<LatticeVector> basis;
  for (const auto& u : lambda_h.basis()) {
    QVec uq = to_qvec(u);
    QVec c = face.to_block_coords(uq);
    LatticeVector row(dim, 0);
    for (std::size_t i = 0; i < c.size(); ++i) row[i] = to_int64(c[i].get_num());
    std::size_t pos = face.dim();
    for (std::size_t f = 0; f < g.gl_factors().size(); ++f) {
      const int n = g.gl_factors()[f];
      const std::size_t o = g.gl_offset(f);
      for (std::size_t k = 0; k < forced[f].size(); ++k)
        if (forced[f][k]) row[pos + k] = u[o + gt_forced_source(n, k)];
      pos += forced[f].size();
    }
    basis.push_back(std::move(row));
  }
  std::size_t pos = face.dim();
  for (const auto& mask : forced) {
    for (std::size_t k = 0; k < mask.size(); ++k) {
      if (mask[k]) continue;
      LatticeVector e(dim, 0);
      e[pos + k] = 1;
      basis.push_back(std::move(e));
    }
    pos += mask.size();
  }
  return {QVec(dim, Rational(0)), std::move(basis)};
}

}  // namespace horo
