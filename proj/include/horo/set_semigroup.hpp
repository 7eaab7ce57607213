#pragma once

// The semigroup of finite lattice sets under pointwise addition, and its
// image in polytopes under the convex hull.

#include "horo/geometry.hpp"

namespace horo {

class FiniteSet {
 public:
  FiniteSet() = default;

  explicit FiniteSet(std::vector<LatticeVector> points)
      : FiniteSet(points, AffineLattice::standard(points.empty() ? 0 : points.front().size())) {}

  FiniteSet(std::vector<LatticeVector> points, AffineLattice lattice)
      : points_(std::move(points)), lattice_(std::move(lattice)) {
    if (points_.empty()) throw DomainError("finite set must be nonempty");
    for (const auto& p : points_) {
      if (p.size() != lattice_.ambient_dim()) throw DomainError("finite set point has wrong dimension");
      if (!lattice_.contains(to_qvec(p))) throw DomainError("finite set point is not in its lattice");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  const std::vector<LatticeVector>& points() const { return points_; }
  const AffineLattice& lattice() const { return lattice_; }
  std::size_t ambient_dim() const { return lattice_.ambient_dim(); }
  std::size_t size() const { return points_.size(); }

  Polytope hull() const { return hull_of_lattice_points(points_); }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<LatticeVector> points_;
  AffineLattice lattice_;
};

inline FiniteSet sumset(const FiniteSet& a, const FiniteSet& b) {
  if (!a.lattice().same_directions(b.lattice())) throw DomainError("sumset: lattices differ");
  std::vector<LatticeVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.points()) {
    for (const auto& y : b.points()) {
      LatticeVector s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.push_back(std::move(s));
    }
  }
  return {std::move(out), a.lattice().with_offset(add(a.lattice().offset(), b.lattice().offset()))};
}

// Lattice points of k * hull(A), in the lattice coset that k-fold sums of A
// occupy.
inline FiniteSet dilated_completion(const FiniteSet& a, long k) {
  if (k < 0) throw DomainError("dilated_completion: negative factor");
  const auto& lat = a.lattice();
  AffineLattice scaled = lat.with_offset(scale(lat.offset(), Rational(k)));
  Polytope p = dilate(a.hull(), Rational(k));
  std::vector<LatticeVector> pts;
  for (const auto& q : lattice_points(p, scaled)) pts.push_back(to_lattice_vector(q));
  return {std::move(pts), scaled};
}

// All points of the set's lattice inside its convex hull.
inline FiniteSet completion_set(const FiniteSet& a) { return dilated_completion(a, 1); }

// A ~ B iff hull(A) = hull(B).
inline bool analogous(const FiniteSet& a, const FiniteSet& b) {
  if (!a.lattice().same_directions(b.lattice())) throw DomainError("analogous: lattices differ");
  return a.hull() == b.hull();
}

// The k-fold sumset A + ... + A; k = 0 gives {0}.
inline FiniteSet iterated_sumset(const FiniteSet& a, long k) {
  if (k < 0) throw DomainError("iterated_sumset: negative count");
  if (k == 0) {
    AffineLattice lat = a.lattice().with_offset(QVec(a.ambient_dim(), Rational(0)));
    return {{LatticeVector(a.ambient_dim(), 0)}, lat};
  }
  FiniteSet s = a;
  for (long i = 1; i < k; ++i) s = sumset(s, a);
  return s;
}

// Checks  A + nD_Z = (n+1)D_Z = D_Z + nD_Z  where D = hull(A) and kD_Z means
// the lattice points of the dilate kD.
inline bool saturation_check(const FiniteSet& a, long n) {
  if (n < 0) throw DomainError("saturation_check: negative n");
  FiniteSet d1 = completion_set(a);
  FiniteSet dn = dilated_completion(a, n);
  FiniteSet dn1 = dilated_completion(a, n + 1);
  return sumset(a, dn) == dn1 && sumset(d1, dn) == dn1;
}

// Same identity with kD_Z read as the k-fold sumset of D_Z. Used only to
// report where the two readings of the notation disagree.
inline bool saturation_check_sumset_reading(const FiniteSet& a, long n) {
  if (n < 0) throw DomainError("saturation_check: negative n");
  FiniteSet d1 = completion_set(a);
  FiniteSet dn = iterated_sumset(d1, n);
  FiniteSet dn1 = iterated_sumset(d1, n + 1);
  return sumset(a, dn) == dn1 && sumset(d1, dn) == dn1;
}

}  // namespace horo
