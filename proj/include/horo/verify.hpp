#pragma once

// Property battery over random horospherical index problems: route
// agreement, integrality, symmetry, completion invariance, additivity under
// products and monotonicity. Deterministic for a given seed.

#include <random>

#include "horo/horospherical.hpp"

namespace horo::verify {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Instance {
  std::string label;
  HorosphericalSpace space;
  std::vector<SupportSet> supports;
};

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Spaces cheap enough for a quick battery: arity at most 4.
inline std::vector<std::pair<std::string, HorosphericalSpace>> space_catalog() {
  using L = AffineLattice;
  auto zero = [](std::size_t n) { return QVec(n, Rational(0)); };
  auto gl2 = GroupDescriptor::gl(2);
  auto gl3 = GroupDescriptor::gl(3);
  ChamberFace gl2_full = ChamberFace::full(gl2);
  ChamberFace gl3_ray({gl3}, {{1, 2}});
  ChamberFace gl3_coray({gl3}, {{2, 1}});
  ChamberFace gl3_full = ChamberFace::full(gl3);
  std::vector<std::pair<std::string, HorosphericalSpace>> out;
  out.emplace_back("GL2/P'", HorosphericalSpace::quotient(gl2_full));
  out.emplace_back("GL2 flag", HorosphericalSpace(gl2_full, L(zero(2), {}), SpaceMode::general));
  out.emplace_back("GL2 Lambda=Z(1,0)", HorosphericalSpace(gl2_full, L(zero(2), {{1, 0}}), SpaceMode::general));
  out.emplace_back("GL2 Lambda index 2",
                   HorosphericalSpace(gl2_full, L(zero(2), {{1, 1}, {2, 0}}), SpaceMode::general));
  out.emplace_back("GL2 Lambda=2Z(1,1)", HorosphericalSpace(gl2_full, L(zero(2), {{2, 2}}), SpaceMode::general));
  out.emplace_back("GL3 Bezout", HorosphericalSpace(gl3_ray, L(zero(3), {{1, 0, 0}}), SpaceMode::general));
  out.emplace_back("GL3 Bezout 2Z", HorosphericalSpace(gl3_ray, L(zero(3), {{2, 0, 0}}), SpaceMode::general));
  out.emplace_back("GL3 {1,2}/P'", HorosphericalSpace::quotient(gl3_ray));
  out.emplace_back("GL3 {1,2} index 2",
                   HorosphericalSpace(gl3_ray, L(zero(3), {{1, 1, 1}, {2, 0, 0}}), SpaceMode::general));
  out.emplace_back("GL3 {2,1}/P'", HorosphericalSpace::quotient(gl3_coray));
  out.emplace_back("GL3 flag", HorosphericalSpace(gl3_full, L(zero(3), {}), SpaceMode::general));
  out.emplace_back("GL3 flag Z(1,1,1)",
                   HorosphericalSpace(gl3_full, L(zero(3), {{1, 1, 1}}), SpaceMode::general));
  return out;
}

// Random support: a dominant base point plus small Lambda(H) combinations
// that stay dominant.
inline SupportSet random_support(const HorosphericalSpace& space, Rng& rng, long spread = 2) {
  const auto& face = space.face();
  const auto& g = space.group();
  QVec c(face.dim());
  std::size_t pos = 0;
  for (const auto& blocks : face.blocks()) {
    std::vector<long> vals;
    for (std::size_t b = 0; b < blocks.size(); ++b) vals.push_back(uniform(rng, 0, 3));
    std::sort(vals.rbegin(), vals.rend());
    for (long v : vals) c[pos++] = v;
  }
  for (int t = 0; t < g.torus_rank(); ++t) c[pos++] = uniform(rng, -2, 2);
  Weight base = to_lattice_vector(face.from_block_coords(c));
  std::vector<Weight> pts{base};
  const auto& basis = space.lambda_h().basis();
  const long extra = basis.empty() ? 0 : uniform(rng, 0, 4);
  for (long i = 0; i < extra; ++i) {
    Weight w = base;
    for (const auto& u : basis) {
      long k = uniform(rng, -spread, spread);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += k * u[j];
    }
    if (g.is_dominant(w)) pts.push_back(std::move(w));
  }
  return {space, pts};
}

inline Instance random_instance(Rng& rng) {
  auto catalog = space_catalog();
  auto& [label, space] = catalog[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(catalog.size()) - 1))];
  std::vector<SupportSet> supports;
  for (std::size_t i = 0; i < space.arity(); ++i) supports.push_back(random_support(space, rng));
  return {label, space, supports};
}

inline std::string describe(const std::vector<SupportSet>& supports) {
  std::string s = "[";
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (i) s += ", ";
    s += "{";
    auto ws = supports[i].weights();
    for (std::size_t k = 0; k < ws.size(); ++k) {
      if (k) s += " ";
      s += "(";
      for (std::size_t j = 0; j < ws[k].size(); ++j) s += (j ? "," : "") + std::to_string(ws[k][j]);
      s += ")";
    }
    s += "}";
  }
  return s + "]";
}

inline std::vector<Check> check_instance(const Instance& inst, Rng& rng, unsigned workers = 1) {
  std::vector<Check> out;
  const auto& space = inst.space;
  const auto& sup = inst.supports;
  const std::string where = inst.label + " " + describe(sup);
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    out.push_back({name, ok, ok ? "" : where + ": " + detail});
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, e.what());
    }
  };

  Rational base = 0;
  bool have_base = false;
  guarded("route agreement", [&] {
    IndexReport r = compute_index(space, sup, workers);
    std::string d = "integral " + to_string(r.integral) + ", lift " + to_string(r.lift);
    if (r.hilbert) d += ", hilbert " + to_string(*r.hilbert);
    add("route agreement", r.agree, d);
    base = r.integral;
    have_base = true;
  });
  if (!have_base || sup.empty()) return out;

  guarded("symmetry", [&] {
    auto perm = sup;
    std::shuffle(perm.begin(), perm.end(), rng);
    Rational v = index_via_integral(space, perm, workers);
    add("symmetry", v == base, "permuted " + to_string(v) + " vs " + to_string(base));
  });

  guarded("completion invariance", [&] {
    auto comp = sup;
    comp[0] = completion_support(sup[0]);
    Rational v = index_via_integral(space, comp, workers);
    Rational w = index_via_lift(space, comp, workers);
    add("completion invariance", v == base && w == base,
        "completed " + to_string(v) + "/" + to_string(w) + " vs " + to_string(base));
  });

  guarded("additivity", [&] {
    SupportSet extra = random_support(space, rng);
    auto prod = sup;
    prod[0] = product_support(sup[0], extra);
    auto other = sup;
    other[0] = extra;
    Rational lhs = index_via_integral(space, prod, workers);
    Rational rhs = base + index_via_integral(space, other, workers);
    Rational lhs_lift = index_via_lift(space, prod, workers);
    add("additivity", lhs == rhs && lhs_lift == rhs,
        "product " + to_string(lhs) + "/" + to_string(lhs_lift) + " vs sum " + to_string(rhs));
  });

  guarded("monotonicity", [&] {
    auto bigger = sup;
    auto ws = sup[0].weights();
    auto more = random_support(space, rng).weights();
    // Keep only weights in the coset of the original support.
    for (const auto& w : more) {
      std::vector<Weight> trial = ws;
      trial.push_back(w);
      try {
        SupportSet s(space, trial);
        ws = trial;
      } catch (const DomainError&) {
      }
    }
    bigger[0] = SupportSet(space, ws);
    Rational v = index_via_integral(space, bigger, workers);
    add("monotonicity", v >= base, "enlarged " + to_string(v) + " < " + to_string(base));
  });
  return out;
}

}  // namespace horo::verify
