#pragma once

// Polarization of homogeneous functionals on convex bodies: mixed volumes,
// exact polynomial integration over polytopes and mixed integrals, all
// relative to a direction lattice Pi that normalizes the measure.

#include <bit>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

#include "horo/geometry.hpp"
#include "horo/polynomial.hpp"

namespace horo {

namespace detail {

// Runs fn(i) for i in [0, count) on up to `workers` threads.
inline void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Integral of prod t_i^{a_i} over the standard simplex in R^m.
inline Rational standard_simplex_moment(const Polynomial::Exponent& a) {
  Integer num = 1;
  unsigned long total = a.size();
  for (int x : a) {
    num *= factorial(static_cast<unsigned long>(x));
    total += static_cast<unsigned long>(x);
  }
  return Rational(num) / Rational(factorial(total));
}

}  // namespace detail

// Integral of f over p for the measure on p's affine span normalized to the
// lattice's translations in that span. On a point this is f evaluated there.
inline Rational integrate(const Polynomial& f, const Polytope& p, const AffineLattice& lat) {
  if (f.num_vars() != p.ambient_dim()) throw DomainError("integrate: polynomial and polytope dimensions differ");
  const std::size_t k = p.dim();
  if (k == 0) return f.evaluate(p.vertices().front());
  Rational cell = lattice_cell_volume(p, lat);
  const auto& coords = p.vertex_span_coords();
  const auto& verts = p.vertices();
  const std::size_t n = p.ambient_dim();
  Rational total = 0;
  for (const auto& s : triangulate(p)) {
    QMat e;
    for (std::size_t i = 1; i < s.size(); ++i) e.push_back(sub(coords[s[i]], coords[s[0]]));
    Rational jac = abs(linalg::det(e)) / cell;
    // x_j = v0_j + sum_i t_i (v_i - v0)_j
    std::vector<Polynomial> subs;
    for (std::size_t j = 0; j < n; ++j) {
      QVec lin(k);
      for (std::size_t i = 0; i < k; ++i) lin[i] = verts[s[i + 1]][j] - verts[s[0]][j];
      subs.push_back(Polynomial::affine(lin, verts[s[0]][j]));
    }
    Polynomial g = f.compose(subs);
    Rational integral = 0;
    for (const auto& [exp, c] : g.terms()) integral += c * detail::standard_simplex_moment(exp);
    total += jac * integral;
  }
  return total;
}

// Volume with respect to the Pi-measure: zero unless p is full-dimensional
// in the directions of pi.
inline Rational volume_parallel(const Polytope& p, const AffineLattice& pi) {
  if (p.dim() > pi.rank()) throw DomainError("body is not parallel to the direction lattice");
  if (p.dim() < pi.rank()) {
    lattice_basis_in_span(p, pi);  // still validates parallelism
    return 0;
  }
  return volume(p, pi);
}

inline Rational integral_parallel(const Polynomial& f, const Polytope& p, const AffineLattice& pi) {
  if (p.dim() > pi.rank()) throw DomainError("body is not parallel to the direction lattice");
  if (p.dim() < pi.rank()) {
    lattice_basis_in_span(p, pi);
    return 0;
  }
  return integrate(f, p, pi);
}

// Bodies parallel to the subspace spanned by `directions`, whose lattice
// normalizes the measure.
class BodySystem {
 public:
  BodySystem(std::vector<Polytope> bodies, AffineLattice directions)
      : bodies_(std::move(bodies)), directions_(std::move(directions)) {
    for (const auto& b : bodies_) {
      if (b.ambient_dim() != directions_.ambient_dim())
        throw DomainError("body ambient dimension differs from the direction lattice");
      for (const auto& d : b.span_basis())
        if (!directions_.spans_direction(d)) throw DomainError("body is not parallel to the direction space");
    }
  }

  const std::vector<Polytope>& bodies() const { return bodies_; }
  const AffineLattice& directions() const { return directions_; }
  std::size_t size() const { return bodies_.size(); }

 private:
  std::vector<Polytope> bodies_;
  AffineLattice directions_;
};

// Symmetric multilinear form of a degree-N homogeneous functional, by
// inclusion-exclusion over nonempty subsets:
//   B(b_1..b_N) = (1/N!) sum_S (-1)^(N-|S|) value(sum_{i in S} b_i).
// Subset sums are built level by level; `workers` threads share each level.
template <class Body, class Sum, class Functional>
Rational polarize(const std::vector<Body>& bodies, std::size_t degree, Sum&& sum, Functional&& value,
                  unsigned workers = 1) {
  const std::size_t n = bodies.size();
  if (n == 0) throw DomainError("polarize: no bodies");
  if (n != degree) throw DomainError("polarize: body count does not match the homogeneity degree");
  if (n > 20) throw DomainError("polarize: too many bodies");
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::optional<Body>> sums(total);
  std::vector<std::vector<std::size_t>> levels(n + 1);
  for (std::size_t mask = 1; mask < total; ++mask) levels[std::popcount(mask)].push_back(mask);
  for (std::size_t level = 1; level <= n; ++level) {
    const auto& masks = levels[level];
    detail::parallel_for(masks.size(), workers, [&](std::size_t i) {
      std::size_t mask = masks[i];
      std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
      if (level == 1)
        sums[mask] = bodies[low];
      else
        sums[mask] = sum(*sums[mask & (mask - 1)], bodies[low]);
    });
  }
  std::vector<Rational> values(total);
  detail::parallel_for(total - 1, workers, [&](std::size_t i) { values[i + 1] = value(*sums[i + 1]); });
  Rational acc = 0;
  for (std::size_t mask = 1; mask < total; ++mask) {
    if ((n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0)
      acc += values[mask];
    else
      acc -= values[mask];
  }
  return acc / Rational(factorial(n));
}

inline Rational mixed_volume(const BodySystem& system, unsigned workers = 1) {
  const auto& pi = system.directions();
  if (system.size() != pi.rank()) throw DomainError("mixed_volume: number of bodies must equal dim(Pi)");
  if (pi.rank() == 0) return 1;  // empty tuple: the constant 1
  return polarize(
      system.bodies(), pi.rank(), [](const Polytope& a, const Polytope& b) { return minkowski_sum(a, b); },
      [&pi](const Polytope& p) { return volume_parallel(p, pi); }, workers);
}

inline Rational mixed_integral(const Polynomial& f, const BodySystem& system, unsigned workers = 1) {
  const auto& pi = system.directions();
  if (f.num_vars() != pi.ambient_dim()) throw DomainError("mixed_integral: polynomial dimension mismatch");
  if (!f.is_homogeneous()) throw DomainError("mixed_integral: polynomial is not homogeneous");
  if (f.is_zero()) {
    if (system.size() < pi.rank()) throw DomainError("mixed_integral: too few bodies");
    return 0;
  }
  const std::size_t degree = pi.rank() + static_cast<std::size_t>(f.total_degree());
  if (system.size() != degree) throw DomainError("mixed_integral: number of bodies must equal dim(Pi) + deg(F)");
  if (degree == 0) return f.coefficient(Polynomial::Exponent(f.num_vars(), 0));
  return polarize(
      system.bodies(), degree, [](const Polytope& a, const Polytope& b) { return minkowski_sum(a, b); },
      [&](const Polytope& p) { return integral_parallel(f, p, pi); }, workers);
}

}  // namespace horo
