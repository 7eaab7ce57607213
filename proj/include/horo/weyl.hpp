#pragma once

// Root data for G = GL(n_1) x ... x GL(n_k) x (C^*)^t.
//
// Weights are integer vectors of length rank(G): the GL factors' coordinates
// in declaration order, then the torus coordinates. A weight is dominant when
// every GL block is non-increasing.

#include <numeric>
#include <utility>

#include "horo/geometry.hpp"
#include "horo/polynomial.hpp"

namespace horo {

using Weight = LatticeVector;

class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  GroupDescriptor(std::vector<int> gl_factors, int torus_rank)
      : gl_(std::move(gl_factors)), torus_(torus_rank) {
    for (int n : gl_)
      if (n < 1) throw DomainError("GL factor size must be >= 1");
    if (torus_ < 0) throw DomainError("torus rank must be >= 0");
  }

  static GroupDescriptor gl(int n) { return {{n}, 0}; }
  static GroupDescriptor torus(int t) { return {{}, t}; }

  const std::vector<int>& gl_factors() const { return gl_; }
  int torus_rank() const { return torus_; }

  int dimension() const {
    int d = torus_;
    for (int n : gl_) d += n * n;
    return d;
  }
  int rank() const { return std::accumulate(gl_.begin(), gl_.end(), torus_); }
  int positive_roots() const { return (dimension() - rank()) / 2; }

  // First weight coordinate of GL factor f; torus coordinates start at
  // gl_offset(gl_factors().size()).
  std::size_t gl_offset(std::size_t f) const {
    return static_cast<std::size_t>(std::accumulate(gl_.begin(), gl_.begin() + static_cast<std::ptrdiff_t>(f), 0));
  }

  bool is_dominant(const QVec& w) const {
    if (w.size() != static_cast<std::size_t>(rank())) return false;
    for (std::size_t f = 0; f < gl_.size(); ++f) {
      std::size_t o = gl_offset(f);
      for (int i = 0; i + 1 < gl_[f]; ++i)
        if (w[o + i] < w[o + i + 1]) return false;
    }
    return true;
  }
  bool is_dominant(const Weight& w) const { return is_dominant(to_qvec(w)); }

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.gl_ == b.gl_ && a.torus_ == b.torus_;
  }

 private:
  std::vector<int> gl_;
  int torus_ = 0;
};

// A face of the dominant chamber: weights that are constant on consecutive
// coordinate blocks of each GL factor. Block coordinates list one value per
// block (factors in order), followed by the torus coordinates.
class ChamberFace {
 public:
  ChamberFace() = default;
  ChamberFace(const GroupDescriptor& g, std::vector<std::vector<int>> blocks) : group_(g), blocks_(std::move(blocks)) {
    if (blocks_.size() != g.gl_factors().size()) throw DomainError("face needs one block list per GL factor");
    for (std::size_t f = 0; f < blocks_.size(); ++f) {
      int total = 0;
      for (int b : blocks_[f]) {
        if (b < 1) throw DomainError("block sizes must be >= 1");
        total += b;
      }
      if (total != g.gl_factors()[f]) throw DomainError("block sizes must sum to the GL factor size");
    }
    for (std::size_t f = 0; f < blocks_.size(); ++f) {
      for (std::size_t b = 0; b < blocks_[f].size(); ++b) {
        for (int i = 0; i < blocks_[f][b]; ++i) block_of_.push_back(num_blocks_);
        ++num_blocks_;
      }
    }
    for (int t = 0; t < g.torus_rank(); ++t) block_of_.push_back(num_blocks_ + static_cast<std::size_t>(t));
  }

  // All blocks of size one: the whole dominant chamber.
  static ChamberFace full(const GroupDescriptor& g) {
    std::vector<std::vector<int>> b;
    for (int n : g.gl_factors()) b.emplace_back(static_cast<std::size_t>(n), 1);
    return {g, b};
  }

  const GroupDescriptor& group() const { return group_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t gl_blocks() const { return num_blocks_; }
  std::size_t dim() const { return num_blocks_ + static_cast<std::size_t>(group_.torus_rank()); }

  // Block coordinate index of weight coordinate i.
  std::size_t block_of(std::size_t i) const { return block_of_.at(i); }

  // Basis of the face lattice in weight coordinates: block indicators, then
  // torus unit vectors.
  std::vector<LatticeVector> lattice_basis() const {
    std::vector<LatticeVector> basis(dim(), LatticeVector(block_of_.size(), 0));
    for (std::size_t i = 0; i < block_of_.size(); ++i) basis[block_of_[i]][i] = 1;
    return basis;
  }

  AffineLattice lattice() const { return {QVec(block_of_.size(), Rational(0)), lattice_basis()}; }

  bool in_span(const QVec& w) const {
    if (w.size() != block_of_.size()) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (block_of_[i] == block_of_[i + 1] && w[i] != w[i + 1]) return false;
    return true;
  }

  bool contains(const QVec& w) const { return in_span(w) && group_.is_dominant(w); }
  bool contains(const Weight& w) const { return contains(to_qvec(w)); }

  // Block coordinates of a weight in the span of the face.
  QVec to_block_coords(const QVec& w) const {
    if (!in_span(w)) throw DomainError("weight is not constant on the blocks of the face");
    QVec c(dim());
    for (std::size_t i = 0; i < w.size(); ++i) c[block_of_[i]] = w[i];
    return c;
  }
  QVec to_block_coords(const Weight& w) const { return to_block_coords(to_qvec(w)); }

  QVec from_block_coords(const QVec& c) const {
    if (c.size() != dim()) throw DomainError("block coordinate vector has wrong length");
    QVec w(block_of_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = c[block_of_[i]];
    return w;
  }

  // The face in block coordinates is c_1 >= c_2 >= ... within each factor.
  bool contains_block_coords(const QVec& c) const { return contains(from_block_coords(c)); }

  friend bool operator==(const ChamberFace& a, const ChamberFace& b) {
    return a.group_ == b.group_ && a.blocks_ == b.blocks_;
  }

 private:
  GroupDescriptor group_;
  std::vector<std::vector<int>> blocks_;
  std::vector<std::size_t> block_of_;
  std::size_t num_blocks_ = 0;
};

// Weyl dimension polynomial in rank(G) variables:
//   prod over GL factors, prod_{i<j} (x_i - x_j + j - i) / (j - i).
inline Polynomial weyl_polynomial(const GroupDescriptor& g) {
  const auto r = static_cast<std::size_t>(g.rank());
  Polynomial f = Polynomial::constant(r, 1);
  for (std::size_t fac = 0; fac < g.gl_factors().size(); ++fac) {
    const std::size_t o = g.gl_offset(fac);
    const int n = g.gl_factors()[fac];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        QVec lin(r, Rational(0));
        Rational inv(1, j - i);
        lin[o + static_cast<std::size_t>(i)] = inv;
        lin[o + static_cast<std::size_t>(j)] = -inv;
        f = f * Polynomial::affine(lin, 1);
      }
    }
  }
  return f;
}

inline Integer dim_irrep(const GroupDescriptor& g, const Weight& lambda) {
  if (lambda.size() != static_cast<std::size_t>(g.rank())) throw DomainError("weight has wrong length");
  if (!g.is_dominant(lambda)) throw DomainError("weight is not dominant");
  Rational v = weyl_polynomial(g).evaluate(to_qvec(lambda));
  if (!is_integer(v) || sgn(v) <= 0) throw InternalError("Weyl dimension is not a positive integer");
  return v.get_num();
}

struct RestrictedWeyl {
  Polynomial restricted;  // F restricted to the span of the face, block coordinates
  Polynomial top;         // its top-degree homogeneous component
};

inline RestrictedWeyl restricted_weyl(const ChamberFace& face) {
  const auto& g = face.group();
  const std::size_t r = static_cast<std::size_t>(g.rank());
  std::vector<Polynomial> subs;
  for (std::size_t i = 0; i < r; ++i) subs.push_back(Polynomial::variable(face.dim(), face.block_of(i)));
  Polynomial fs = weyl_polynomial(g).compose(subs);
  return {fs, fs.top_component()};
}

// Number of positive roots that do not vanish on the face: pairs i < j in
// one GL factor lying in different blocks.
inline int top_weyl_degree(const ChamberFace& face) {
  const auto& g = face.group();
  int count = 0;
  for (std::size_t fac = 0; fac < g.gl_factors().size(); ++fac) {
    const std::size_t o = g.gl_offset(fac);
    for (int i = 0; i < g.gl_factors()[fac]; ++i)
      for (int j = i + 1; j < g.gl_factors()[fac]; ++j)
        if (face.block_of(o + static_cast<std::size_t>(i)) != face.block_of(o + static_cast<std::size_t>(j))) ++count;
  }
  return count;
}

struct SpaceDims {
  int p;  // dim G/P'
  int m;  // dim G/H
};

// lambda_h is given in weight coordinates and must lie in the face lattice.
inline SpaceDims space_dims(const ChamberFace& face, const AffineLattice& lambda_h) {
  if (lambda_h.ambient_dim() != static_cast<std::size_t>(face.group().rank()))
    throw DomainError("Lambda(H) has wrong ambient dimension");
  for (const auto& b : lambda_h.basis())
    if (!face.in_span(to_qvec(b))) throw DomainError("Lambda(H) is not contained in the face lattice");
  const int deg = top_weyl_degree(face);
  return {deg + static_cast<int>(face.dim()), deg + static_cast<int>(lambda_h.rank())};
}

}  // namespace horo
