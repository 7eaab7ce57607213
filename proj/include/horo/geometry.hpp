#pragma once

// Rational convex polytopes with an explicit affine span, plus affine lattices
// used to normalize volumes and enumerate lattice points.
//
// A Polytope stores its vertex set (lexicographically sorted, extreme points
// only), an RREF basis of the direction space of its affine span, and its
// facets expressed in span coordinates. Span coordinates of a point x are the
// entries of x - origin at the pivot columns of the RREF basis, where origin
// is the lexicographically smallest vertex.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>

#include "horo/linalg.hpp"

namespace horo {

class AffineLattice {
 public:
  AffineLattice() = default;

  AffineLattice(QVec offset, std::vector<LatticeVector> basis)
      : offset_(std::move(offset)), basis_(std::move(basis)) {
    for (const auto& b : basis_) {
      if (b.size() != offset_.size()) throw DomainError("lattice basis vector has wrong dimension");
    }
    if (linalg::rank(basis_q()) != basis_.size()) throw DomainError("lattice basis is not linearly independent");
  }

  static AffineLattice standard(std::size_t n) {
    std::vector<LatticeVector> basis(n, LatticeVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
    return {QVec(n, Rational(0)), std::move(basis)};
  }

  const QVec& offset() const { return offset_; }
  const std::vector<LatticeVector>& basis() const { return basis_; }
  std::size_t ambient_dim() const { return offset_.size(); }
  std::size_t rank() const { return basis_.size(); }

  QMat basis_q() const {
    QMat out;
    for (const auto& b : basis_) out.push_back(to_qvec(b));
    return out;
  }

  // Integer coordinates of x - offset in the basis, if x is a lattice point.
  std::optional<LatticeVector> coordinates(const QVec& x) const {
    auto c = linalg::coordinates_in(basis_q(), sub(x, offset_));
    if (!c) return std::nullopt;
    for (const auto& v : *c)
      if (!is_integer(v)) return std::nullopt;
    return to_lattice_vector(*c);
  }

  bool contains(const QVec& x) const { return coordinates(x).has_value(); }

  bool spans_direction(const QVec& d) const { return linalg::in_span(basis_q(), d); }

  // True when both lattices have the same group of translations.
  bool same_directions(const AffineLattice& o) const {
    if (o.ambient_dim() != ambient_dim() || o.rank() != rank()) return false;
    AffineLattice a(QVec(ambient_dim(), Rational(0)), basis_);
    AffineLattice b(QVec(ambient_dim(), Rational(0)), o.basis_);
    for (const auto& v : o.basis_)
      if (!a.contains(to_qvec(v))) return false;
    for (const auto& v : basis_)
      if (!b.contains(to_qvec(v))) return false;
    return true;
  }

  // Same translation group and the offsets differ by a lattice vector.
  bool same_coset(const AffineLattice& o) const { return same_directions(o) && contains(o.offset_); }

  AffineLattice with_offset(QVec offset) const { return {std::move(offset), basis_}; }

  friend bool operator==(const AffineLattice& a, const AffineLattice& b) { return a.same_coset(b); }

 private:
  QVec offset_;
  std::vector<LatticeVector> basis_;
};

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool operator==(const Bitset& o) const { return words_ == o.words_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DDFacet {
  ZVec normal;  // normal . x <= offset on the hull
  Integer offset;
  Bitset tight;
};

inline Integer zdot(const ZVec& a, const ZVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void make_primitive(DDFacet& f) {
  Integer g = f.offset;
  for (const auto& x : f.normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  g = abs(g);
  if (g > 1) {
    for (auto& x : f.normal) x /= g;
    f.offset /= g;
  }
}

// Hyperplane through k affinely independent points of Z^k.
inline DDFacet hyperplane_through(const std::vector<const ZVec*>& pts, std::size_t k) {
  QMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(k);
    for (std::size_t j = 0; j < k; ++j) d[j] = (*pts[i])[j] - (*pts[0])[j];
    diffs.push_back(std::move(d));
  }
  QMat ns = linalg::nullspace(diffs, k);
  if (ns.size() != 1) throw InternalError("hyperplane_through: points not affinely independent");
  DDFacet f;
  f.normal = linalg::primitive_integer_row(ns.front());
  f.offset = zdot(f.normal, *pts[0]);
  return f;
}

// Double-description facet enumeration for a full-dimensional point set in
// Z^k (k >= 1). Points are inserted in the given order; tight sets index
// into `pts`.
inline std::vector<DDFacet> dd_hull(const std::vector<ZVec>& pts, std::size_t k) {
  const std::size_t n = pts.size();
  // Greedy affinely independent initial simplex, kept as fully reduced rows.
  std::vector<std::size_t> simplex{0};
  QMat rows;
  std::vector<std::size_t> piv;
  for (std::size_t i = 1; i < n && simplex.size() < k + 1; ++i) {
    QVec v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = pts[i][j] - pts[0][j];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (sgn(v[piv[r]]) == 0) continue;
      Rational f = v[piv[r]];
      for (std::size_t j = 0; j < k; ++j) v[j] -= f * rows[r][j];
    }
    std::size_t p = 0;
    while (p < k && sgn(v[p]) == 0) ++p;
    if (p == k) continue;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (sgn(rows[r][p]) == 0) continue;
      Rational f = rows[r][p];
      for (std::size_t j = 0; j < k; ++j) rows[r][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    piv.push_back(p);
    simplex.push_back(i);
  }
  if (simplex.size() != k + 1) throw InternalError("dd_hull: point set is not full-dimensional");

  std::vector<DDFacet> facets;
  for (std::size_t omit = 0; omit <= k; ++omit) {
    std::vector<const ZVec*> on;
    for (std::size_t j = 0; j <= k; ++j)
      if (j != omit) on.push_back(&pts[simplex[j]]);
    DDFacet f = hyperplane_through(on, k);
    if (zdot(f.normal, pts[simplex[omit]]) > f.offset) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    f.tight = Bitset(n);
    for (std::size_t j = 0; j <= k; ++j)
      if (j != omit) f.tight.set(simplex[j]);
    facets.push_back(std::move(f));
  }

  std::vector<bool> in_simplex(n, false);
  for (auto s : simplex) in_simplex[s] = true;

  std::vector<Integer> slack;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_simplex[i]) continue;
    const ZVec& p = pts[i];
    slack.assign(facets.size(), Integer(0));
    bool any_out = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      slack[f] = zdot(facets[f].normal, p) - facets[f].offset;
      if (slack[f] > 0) any_out = true;
    }
    if (!any_out) {
      for (std::size_t f = 0; f < facets.size(); ++f)
        if (slack[f] == 0) facets[f].tight.set(i);
      continue;
    }
    std::vector<DDFacet> next;
    std::vector<std::size_t> plus, minus;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (slack[f] > 0)
        plus.push_back(f);
      else if (slack[f] < 0)
        minus.push_back(f);
    }
    for (auto fp : plus) {
      for (auto fm : minus) {
        Bitset common = facets[fp].tight & facets[fm].tight;
        if (common.count() + 1 < k) continue;
        bool adjacent = true;
        for (std::size_t g = 0; g < facets.size() && adjacent; ++g) {
          if (g == fp || g == fm) continue;
          if (common.subset_of(facets[g].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        DDFacet nf;
        Integer wp = -slack[fm], wm = slack[fp];
        nf.normal.resize(k);
        for (std::size_t j = 0; j < k; ++j) nf.normal[j] = wp * facets[fp].normal[j] + wm * facets[fm].normal[j];
        nf.offset = wp * facets[fp].offset + wm * facets[fm].offset;
        make_primitive(nf);
        nf.tight = common;
        nf.tight.set(i);
        next.push_back(std::move(nf));
      }
    }
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (slack[f] > 0) continue;
      if (slack[f] == 0) facets[f].tight.set(i);
      next.push_back(std::move(facets[f]));
    }
    facets = std::move(next);
  }
  return facets;
}

}  // namespace detail

class Polytope {
 public:
  struct SpanFacet {
    QVec normal;  // in span coordinates
    Rational offset;
    std::vector<std::size_t> vertex_ids;  // sorted indices into vertices()
  };

  struct Facet {
    QVec normal;  // ambient; valid for points of the affine span
    Rational offset;
  };

  Polytope() = default;

  static Polytope hull(std::span<const QVec> points) {
    if (points.empty()) throw DomainError("hull of an empty point set");
    const std::size_t n = points.front().size();
    for (const auto& p : points)
      if (p.size() != n) throw DomainError("hull: points of unequal dimension");

    std::vector<QVec> pts(points.begin(), points.end());
    for (auto& pt : pts)
      for (auto& x : pt) x.canonicalize();
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope P;
    P.ambient_dim_ = n;
    QMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    auto r = linalg::rref(diffs, n);
    P.basis_ = std::move(r.rows);
    P.pivots_ = std::move(r.pivots);
    const std::size_t k = P.basis_.size();
    P.origin_ = pts[0];

    if (k == 0) {
      P.vertices_ = {pts[0]};
      P.vertex_coords_ = {QVec{}};
      return P;
    }

    std::vector<QVec> coords;
    coords.reserve(pts.size());
    Integer scale_factor = 1;
    for (const auto& p : pts) {
      coords.push_back(P.span_coords_unchecked(p));
      mpz_lcm(scale_factor.get_mpz_t(), scale_factor.get_mpz_t(), lcm_of_denominators(coords.back()).get_mpz_t());
    }
    std::vector<ZVec> zpts;
    zpts.reserve(coords.size());
    for (const auto& c : coords) {
      ZVec z(k);
      for (std::size_t j = 0; j < k; ++j) z[j] = c[j].get_num() * (scale_factor / c[j].get_den());
      zpts.push_back(std::move(z));
    }

    auto dd = detail::dd_hull(zpts, k);

    std::vector<std::size_t> vertex_of_point(pts.size(), SIZE_MAX);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      detail::Bitset meet;
      bool first = true;
      for (const auto& f : dd) {
        if (!f.tight.test(i)) continue;
        meet = first ? f.tight : (meet & f.tight);
        first = false;
      }
      if (!first && meet.count() == 1) {
        vertex_of_point[i] = P.vertices_.size();
        P.vertices_.push_back(pts[i]);
        P.vertex_coords_.push_back(coords[i]);
      }
    }
    // pts[0] is always extreme (lexicographic minimum), so origin_ is vertex 0.
    for (const auto& f : dd) {
      SpanFacet sf;
      sf.normal.resize(k);
      for (std::size_t j = 0; j < k; ++j) sf.normal[j] = f.normal[j];
      sf.offset = Rational(f.offset) / Rational(scale_factor);
      sf.offset.canonicalize();
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (f.tight.test(i) && vertex_of_point[i] != SIZE_MAX) sf.vertex_ids.push_back(vertex_of_point[i]);
      P.facets_.push_back(std::move(sf));
    }
    std::sort(P.facets_.begin(), P.facets_.end(),
              [](const SpanFacet& a, const SpanFacet& b) { return a.vertex_ids < b.vertex_ids; });
    return P;
  }

  static Polytope hull(std::initializer_list<QVec> points) {
    std::vector<QVec> v(points);
    return hull(std::span<const QVec>(v));
  }

  static Polytope point(QVec p) { return hull(std::span<const QVec>(&p, 1)); }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& vertices() const { return vertices_; }
  const QVec& origin() const { return origin_; }
  const QMat& span_basis() const { return basis_; }
  const std::vector<std::size_t>& span_pivots() const { return pivots_; }
  const std::vector<SpanFacet>& span_facets() const { return facets_; }
  const std::vector<QVec>& vertex_span_coords() const { return vertex_coords_; }

  std::vector<Facet> facets() const {
    std::vector<Facet> out;
    for (const auto& f : facets_) {
      QVec a(ambient_dim_, Rational(0));
      for (std::size_t j = 0; j < pivots_.size(); ++j) a[pivots_[j]] = f.normal[j];
      out.push_back({a, f.offset + dot(a, origin_)});
    }
    return out;
  }

  bool in_affine_span(const QVec& x) const {
    if (x.size() != ambient_dim_) return false;
    QVec d = sub(x, origin_);
    QVec recon(ambient_dim_, Rational(0));
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      const Rational& c = d[pivots_[j]];
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < ambient_dim_; ++i) recon[i] += c * basis_[j][i];
    }
    return recon == d;
  }

  // Span coordinates; throws when x is off the affine span.
  QVec span_coords(const QVec& x) const {
    if (!in_affine_span(x)) throw DomainError("point is outside the affine span of the polytope");
    return span_coords_unchecked(x);
  }

  bool contains(const QVec& x) const {
    if (!in_affine_span(x)) return false;
    QVec c = span_coords_unchecked(x);
    for (const auto& f : facets_)
      if (dot(f.normal, c) > f.offset) return false;
    return true;
  }

  // Is the direction d parallel to the affine span?
  bool spans_direction(const QVec& d) const {
    QVec recon(ambient_dim_, Rational(0));
    for (std::size_t j = 0; j < pivots_.size(); ++j)
      for (std::size_t i = 0; i < ambient_dim_; ++i) recon[i] += d[pivots_[j]] * basis_[j][i];
    return recon == d;
  }

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  QVec span_coords_unchecked(const QVec& x) const {
    QVec c(pivots_.size());
    for (std::size_t j = 0; j < pivots_.size(); ++j) c[j] = x[pivots_[j]] - origin_[pivots_[j]];
    return c;
  }

  std::size_t ambient_dim_ = 0;
  QVec origin_;
  QMat basis_;
  std::vector<std::size_t> pivots_;
  std::vector<QVec> vertices_;
  std::vector<QVec> vertex_coords_;
  std::vector<SpanFacet> facets_;
};

inline Polytope hull(std::span<const QVec> points) { return Polytope::hull(points); }
inline Polytope hull(std::initializer_list<QVec> points) { return Polytope::hull(points); }

inline Polytope hull_of_lattice_points(std::span<const LatticeVector> points) {
  std::vector<QVec> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_qvec(p));
  return Polytope::hull(q);
}

inline Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DomainError("minkowski_sum: dimension mismatch");
  std::vector<QVec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::hull(sums);
}

inline Polytope dilate(const Polytope& p, const Rational& k) {
  if (sgn(k) < 0) throw DomainError("dilate: negative factor");
  if (sgn(k) == 0) return Polytope::point(QVec(p.ambient_dim(), Rational(0)));
  std::vector<QVec> v;
  for (const auto& x : p.vertices()) v.push_back(scale(x, k));
  return Polytope::hull(v);
}

inline Polytope translate(const Polytope& p, const QVec& t) {
  std::vector<QVec> v;
  for (const auto& x : p.vertices()) v.push_back(add(x, t));
  return Polytope::hull(v);
}

// Polytope from {x : rows[i] . x <= rhs[i]}; must be bounded and nonempty.
// Vertices are found by enumerating independent sets of tight constraints.
inline Polytope from_inequalities(const QMat& rows, const QVec& rhs, std::size_t n) {
  std::set<QVec, decltype(&lex_less)> found(&lex_less);
  if (n == 0) return Polytope::point(QVec{});
  std::vector<std::size_t> chosen;
  // Reduced rows of the chosen constraints (including the rhs column).
  auto recurse = [&](auto&& self, std::size_t start, QMat reduced, std::vector<std::size_t> pivots) -> void {
    if (reduced.size() == n) {
      QVec x(n);
      for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = reduced[r][n];
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (dot(rows[i], x) > rhs[i]) return;
      found.insert(std::move(x));
      return;
    }
    if (rows.size() - start < n - reduced.size()) return;
    for (std::size_t i = start; i < rows.size(); ++i) {
      QVec v = rows[i];
      v.push_back(rhs[i]);
      for (std::size_t r = 0; r < reduced.size(); ++r) {
        if (sgn(v[pivots[r]]) == 0) continue;
        Rational f = v[pivots[r]];
        for (std::size_t j = 0; j <= n; ++j) v[j] -= f * reduced[r][j];
      }
      std::size_t p = 0;
      while (p < n && sgn(v[p]) == 0) ++p;
      if (p == n) continue;  // dependent on the rows already chosen
      Rational inv = 1 / v[p];
      for (auto& x : v) x *= inv;
      QMat next = reduced;
      for (auto& row : next) {
        if (sgn(row[p]) == 0) continue;
        Rational f = row[p];
        for (std::size_t j = 0; j <= n; ++j) row[j] -= f * v[j];
      }
      next.push_back(std::move(v));
      auto next_piv = pivots;
      next_piv.push_back(p);
      self(self, i + 1, std::move(next), std::move(next_piv));
    }
  };
  recurse(recurse, 0, {}, {});
  if (found.empty()) throw DomainError("from_inequalities: empty or unbounded region");
  std::vector<QVec> v(found.begin(), found.end());
  return Polytope::hull(v);
}

// Points of the affine lattice inside p, lexicographically sorted.
inline std::vector<QVec> lattice_points(const Polytope& p, const AffineLattice& lat) {
  if (p.ambient_dim() != lat.ambient_dim()) throw DomainError("lattice_points: dimension mismatch");
  const std::size_t r = lat.rank();
  if (r == 0) {
    if (p.contains(lat.offset())) return {lat.offset()};
    return {};
  }
  // Left inverse of the basis: c = (B^T B)^{-1} B^T (x - offset).
  QMat b = lat.basis_q();  // r rows
  QMat gram(r, QVec(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(b[i], b[j]);
  // Integer coordinates range over [ceil(min), floor(max)] across vertices.
  std::vector<Rational> cmin(r), cmax(r);
  bool first = true;
  for (const auto& v : p.vertices()) {
    QVec d = sub(v, lat.offset());
    QVec bt(r);
    for (std::size_t i = 0; i < r; ++i) bt[i] = dot(b[i], d);
    QVec c = *linalg::solve(gram, bt);
    for (std::size_t i = 0; i < r; ++i) {
      if (first || c[i] < cmin[i]) cmin[i] = c[i];
      if (first || c[i] > cmax[i]) cmax[i] = c[i];
    }
    first = false;
  }
  std::vector<Integer> los(r), his(r);
  for (std::size_t i = 0; i < r; ++i) {
    mpz_cdiv_q(los[i].get_mpz_t(), cmin[i].get_num_mpz_t(), cmin[i].get_den_mpz_t());
    mpz_fdiv_q(his[i].get_mpz_t(), cmax[i].get_num_mpz_t(), cmax[i].get_den_mpz_t());
    if (los[i] > his[i]) return {};
  }
  std::vector<QVec> out;
  std::vector<Integer> c = los;
  while (true) {
    QVec x = lat.offset();
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] == 0) continue;
      Rational ci(c[i]);
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += ci * b[i][j];
    }
    if (p.contains(x)) out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < r) {
      if (c[i] < his[i]) {
        ++c[i];
        break;
      }
      c[i] = los[i];
      ++i;
    }
    if (i == r) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// Fan triangulation: each face is coned from its lexicographically smallest
// vertex over the triangulations of its facets not containing that vertex.
// Simplices are returned as sorted vertex-index lists.
inline std::vector<std::vector<std::size_t>> triangulate(const Polytope& p) {
  const auto& coords = p.vertex_span_coords();
  auto affine_dim = [&](const std::vector<std::size_t>& ids) -> std::size_t {
    QMat d;
    for (std::size_t i = 1; i < ids.size(); ++i) d.push_back(sub(coords[ids[i]], coords[ids[0]]));
    return linalg::rank(d);
  };
  std::vector<std::vector<std::size_t>> out;
  auto rec = [&](auto&& self, const std::vector<std::size_t>& face, std::size_t j,
                 std::vector<std::size_t>& apexes) -> void {
    if (j == 0) {
      auto s = apexes;
      s.push_back(face.front());
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& f : p.span_facets()) {
      std::vector<std::size_t> t;
      std::set_intersection(face.begin(), face.end(), f.vertex_ids.begin(), f.vertex_ids.end(),
                            std::back_inserter(t));
      if (t.empty() || t.front() == apex || t.size() == face.size()) continue;
      if (subfaces.count(t)) continue;
      if (affine_dim(t) != j - 1) continue;
      subfaces.insert(t);
    }
    apexes.push_back(apex);
    for (const auto& t : subfaces) self(self, t, j - 1, apexes);
    apexes.pop_back();
  };
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> apexes;
  rec(rec, all, p.dim(), apexes);
  return out;
}

// Basis (as ambient vectors) of the sublattice of `lat`'s translation group
// lying in the direction space of p. Throws if p's span is not parallel to
// the lattice's span.
inline QMat lattice_basis_in_span(const Polytope& p, const AffineLattice& lat) {
  const std::size_t k = p.dim();
  QMat lb = lat.basis_q();
  for (const auto& d : p.span_basis())
    if (!linalg::in_span(lb, d)) throw DomainError("polytope span is not contained in the lattice directions");
  if (lat.rank() == k) return lb;
  const std::size_t n = p.ambient_dim();
  QMat normals = linalg::nullspace(p.span_basis(), n);
  std::vector<ZVec> m;
  for (const auto& nv : normals) {
    QVec row(lat.rank());
    for (std::size_t i = 0; i < lat.rank(); ++i) row[i] = dot(nv, lb[i]);
    m.push_back(linalg::primitive_integer_row(row));
  }
  auto ker = linalg::integer_kernel(m, lat.rank());
  if (ker.size() != k) throw InternalError("lattice_basis_in_span: unexpected kernel rank");
  QMat out;
  for (const auto& c : ker) {
    QVec w(n, Rational(0));
    for (std::size_t i = 0; i < lat.rank(); ++i)
      for (std::size_t j = 0; j < n; ++j) w[j] += Rational(c[i]) * lb[i][j];
    out.push_back(std::move(w));
  }
  return out;
}

// |det| of the lattice basis restricted to p's span, in span coordinates.
inline Rational lattice_cell_volume(const Polytope& p, const AffineLattice& lat) {
  QMat w = lattice_basis_in_span(p, lat);
  QMat wc;
  for (const auto& v : w) {
    QVec c(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) c[j] = v[p.span_pivots()[j]];
    wc.push_back(std::move(c));
  }
  return abs(linalg::det(wc));
}

// Volume of p in its own affine span, normalized so a fundamental cell of the
// lattice's translations inside that span has volume 1. A point has volume 1.
inline Rational volume(const Polytope& p, const AffineLattice& lat) {
  if (p.ambient_dim() != lat.ambient_dim()) throw DomainError("volume: dimension mismatch");
  const std::size_t k = p.dim();
  if (k == 0) return 1;
  Rational cell = lattice_cell_volume(p, lat);
  const auto& coords = p.vertex_span_coords();
  Rational total = 0;
  for (const auto& s : triangulate(p)) {
    QMat e;
    for (std::size_t i = 1; i < s.size(); ++i) e.push_back(sub(coords[s[i]], coords[s[0]]));
    total += abs(linalg::det(e));
  }
  return total / Rational(factorial(k)) / cell;
}

}  // namespace horo
