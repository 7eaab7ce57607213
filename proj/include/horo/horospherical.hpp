#pragma once

// Horospherical spaces G/H with P' in H in P, described by a chamber face
// (which fixes P) and the lattice Lambda(H) of characters of P trivial on H.
// Supports of invariant subspaces / linear systems, their moment polytopes
// and completions, and the intersection index computed three ways.

#include <optional>

#include "horo/gt.hpp"
#include "horo/polarization.hpp"
#include "horo/set_semigroup.hpp"

namespace horo {

enum class SpaceMode { quotient_by_commutator, general };

inline std::string to_string(SpaceMode m) {
  return m == SpaceMode::quotient_by_commutator ? "quotient_by_commutator" : "general";
}

inline SpaceMode parse_space_mode(const std::string& s) {
  if (s == "quotient_by_commutator") return SpaceMode::quotient_by_commutator;
  if (s == "general") return SpaceMode::general;
  throw DomainError("unknown mode '" + s + "'");
}

class HorosphericalSpace {
 public:
  HorosphericalSpace(ChamberFace face, AffineLattice lambda_h, SpaceMode mode)
      : face_(std::move(face)), lambda_h_(std::move(lambda_h)), mode_(mode) {
    if (!is_zero(lambda_h_.offset())) throw DomainError("Lambda(H) must be a sublattice (zero offset)");
    dims_ = space_dims(face_, lambda_h_);
    if (mode_ == SpaceMode::quotient_by_commutator && !lambda_h_.same_directions(face_.lattice()))
      throw DomainError("quotient mode requires Lambda(H) to equal the face lattice");
    std::vector<LatticeVector> basis;
    for (const auto& u : lambda_h_.basis()) basis.push_back(to_lattice_vector(face_.to_block_coords(to_qvec(u))));
    block_lambda_h_ = AffineLattice(QVec(face_.dim(), Rational(0)), std::move(basis));
    auto rw = restricted_weyl(face_);
    weyl_ = std::move(rw.restricted);
    phi_ = std::move(rw.top);
  }

  // G/P': Lambda(H) is the whole face lattice.
  static HorosphericalSpace quotient(const ChamberFace& face) {
    return {face, face.lattice(), SpaceMode::quotient_by_commutator};
  }

  const GroupDescriptor& group() const { return face_.group(); }
  const ChamberFace& face() const { return face_; }
  const AffineLattice& lambda_h() const { return lambda_h_; }
  // Lambda(H) in block coordinates.
  const AffineLattice& block_lambda_h() const { return block_lambda_h_; }
  SpaceMode mode() const { return mode_; }
  int p() const { return dims_.p; }
  int m() const { return dims_.m; }
  // Number of supports an index takes: the dimension of G/H (equal to p in
  // quotient mode).
  std::size_t arity() const { return static_cast<std::size_t>(dims_.m); }

  const Polynomial& restricted_weyl_polynomial() const { return weyl_; }
  const Polynomial& phi() const { return phi_; }

  friend bool operator==(const HorosphericalSpace& a, const HorosphericalSpace& b) {
    return a.face_ == b.face_ && a.lambda_h_.same_directions(b.lambda_h_) && a.mode_ == b.mode_;
  }

 private:
  ChamberFace face_;
  AffineLattice lambda_h_;
  SpaceMode mode_;
  SpaceDims dims_{};
  AffineLattice block_lambda_h_;
  Polynomial weyl_;
  Polynomial phi_;
};

// Support of an invariant subspace or linear system: dominant weights on the
// face, all in one coset of Lambda(H). Kept in block coordinates.
class SupportSet {
 public:
  SupportSet(const HorosphericalSpace& space, const std::vector<Weight>& weights) : space_(space) {
    if (weights.empty()) throw DomainError("support must be nonempty");
    const auto& face = space.face();
    std::vector<LatticeVector> block;
    for (const auto& w : weights) {
      if (w.size() != static_cast<std::size_t>(space.group().rank())) throw DomainError("support weight has wrong length");
      if (!face.in_span(to_qvec(w))) throw DomainError("support weight is not constant on the face blocks");
      if (!space.group().is_dominant(w)) throw DomainError("support weight is not dominant");
      block.push_back(to_lattice_vector(face.to_block_coords(w)));
    }
    AffineLattice coset = space.block_lambda_h().with_offset(to_qvec(block.front()));
    for (const auto& b : block)
      if (!coset.contains(to_qvec(b))) throw DomainError("support weights are not in one coset of Lambda(H)");
    set_ = FiniteSet(std::move(block), std::move(coset));
  }

  SupportSet(const HorosphericalSpace& space, FiniteSet block_set) : space_(space), set_(std::move(block_set)) {}

  const HorosphericalSpace& space() const { return space_; }
  // Points in block coordinates with their Lambda(H) coset.
  const FiniteSet& block_set() const { return set_; }

  std::vector<Weight> weights() const {
    std::vector<Weight> out;
    for (const auto& b : set_.points()) out.push_back(to_lattice_vector(space_.face().from_block_coords(to_qvec(b))));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Moment polytope in block coordinates.
  Polytope block_polytope() const { return set_.hull(); }

 private:
  HorosphericalSpace space_;
  FiniteSet set_;
};

// Moment polytope in weight coordinates.
inline Polytope moment_polytope(const SupportSet& a) {
  std::vector<QVec> pts;
  for (const auto& w : a.weights()) pts.push_back(to_qvec(w));
  return hull(pts);
}

inline SupportSet product_support(const SupportSet& a, const SupportSet& b) {
  if (!(a.space() == b.space())) throw DomainError("product_support: supports belong to different spaces");
  return {a.space(), sumset(a.block_set(), b.block_set())};
}

inline SupportSet completion_support(const SupportSet& a) { return {a.space(), completion_set(a.block_set())}; }

namespace detail {

inline void check_supports(const HorosphericalSpace& space, const std::vector<SupportSet>& supports) {
  if (supports.size() != space.arity())
    throw DomainError("index needs " + std::to_string(space.arity()) + " supports, got " +
                      std::to_string(supports.size()));
  for (const auto& s : supports)
    if (!(s.space() == space)) throw DomainError("support belongs to a different space");
}

inline Rational checked_index(const Rational& v, const char* route) {
  if (!is_integer(v) || sgn(v) < 0)
    throw ValidationError(std::string(route) + " route produced " + to_string(v) + ", not a nonnegative integer");
  return v;
}

}  // namespace detail

// arity! times the mixed integral of phi over the moment polytopes.
inline Rational index_via_integral(const HorosphericalSpace& space, const std::vector<SupportSet>& supports,
                                   unsigned workers = 1) {
  detail::check_supports(space, supports);
  std::vector<Polytope> bodies;
  for (const auto& s : supports) bodies.push_back(s.block_polytope());
  BodySystem system(std::move(bodies), space.block_lambda_h());
  Rational v = mixed_integral(space.phi(), system, workers) * Rational(factorial(space.arity()));
  return detail::checked_index(v, "integral");
}

// arity! times the mixed volume of the Newton lifts.
inline Rational index_via_lift(const HorosphericalSpace& space, const std::vector<SupportSet>& supports,
                               unsigned workers = 1) {
  detail::check_supports(space, supports);
  std::vector<Polytope> bodies;
  for (const auto& s : supports) bodies.push_back(newton_lift(space.face(), s.block_polytope()));
  BodySystem system(std::move(bodies), lift_lattice(space.face(), space.lambda_h()));
  Rational v = mixed_volume(system, workers) * Rational(factorial(space.arity()));
  return detail::checked_index(v, "lift");
}

// Dimension of the completed k-th power: sum of dim V_lambda over the points
// of k * Delta(A) in the coset k*a + Lambda(H).
inline Integer hilbert_function(const SupportSet& a, long k) {
  if (k < 0) throw DomainError("hilbert_function: k must be >= 0");
  const auto& f = a.space().restricted_weyl_polynomial();
  Rational total = 0;
  const FiniteSet dilate_k = dilated_completion(a.block_set(), k);
  for (const auto& x : dilate_k.points()) total += f.evaluate(to_qvec(x));
  if (!is_integer(total)) throw InternalError("hilbert_function: non-integral value");
  return total.get_num();
}

// Coefficients (constant first) of the polynomial through (k, H(k)) for
// k = 0..count-1.
inline QVec hilbert_polynomial(const SupportSet& a, std::size_t count) {
  QMat vander(count, QVec(count));
  QVec values(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational pw = 1;
    for (std::size_t j = 0; j < count; ++j) {
      vander[k][j] = pw;
      pw *= static_cast<long>(k);
    }
    values[k] = Rational(hilbert_function(a, static_cast<long>(k)));
  }
  auto c = linalg::solve(vander, values);
  if (!c) throw InternalError("hilbert_polynomial: singular interpolation system");
  return *c;
}

// arity! times the leading coefficient of the Hilbert polynomial in degree
// arity. Extra interpolation nodes certify the degree bound.
inline Rational self_index_via_hilbert(const SupportSet& a) {
  const auto& space = a.space();
  const std::size_t n = space.arity();
  const auto deg = static_cast<std::size_t>(space.phi().total_degree());
  QVec c = hilbert_polynomial(a, n + deg + 2);
  for (std::size_t j = n + 1; j < c.size(); ++j)
    if (sgn(c[j]) != 0) throw InternalError("self_index_via_hilbert: Hilbert polynomial degree exceeds the dimension");
  Rational v = c[n] * Rational(factorial(n));
  return detail::checked_index(v, "hilbert");
}

struct IndexReport {
  Rational integral;
  Rational lift;
  std::optional<Rational> hilbert;  // only when all moment polytopes coincide
  bool agree = true;
};

inline bool is_diagonal(const std::vector<SupportSet>& supports) {
  if (supports.empty()) return false;
  Polytope first = supports.front().block_polytope();
  for (const auto& s : supports)
    if (!(s.block_polytope() == first)) return false;
  return true;
}

inline IndexReport compute_index(const HorosphericalSpace& space, const std::vector<SupportSet>& supports,
                                 unsigned workers = 1) {
  IndexReport r;
  r.integral = index_via_integral(space, supports, workers);
  r.lift = index_via_lift(space, supports, workers);
  r.agree = r.integral == r.lift;
  if (is_diagonal(supports)) {
    r.hilbert = self_index_via_hilbert(supports.front());
    r.agree = r.agree && *r.hilbert == r.integral;
  }
  return r;
}

}  // namespace horo
