#pragma once

// JSON encoding of the library's values. Rationals are always strings
// ("p/q" or "p"); integers may also be given as JSON numbers on input.
// Decoding errors carry a JSON-pointer-style location.

#include <json.hpp>

#include "horo/horospherical.hpp"

namespace horo::json_io {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + "@byte " + std::to_string(e.byte), e.what());
  }
}

// ---- decoding --------------------------------------------------------------

inline const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, "missing field '" + key + "'");
  return *it;
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

inline Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path, "expected a rational as a string \"p/q\" or an integer");
}

inline int64_t read_int(const json& j, const std::string& path) {
  Rational q = read_rational(j, path);
  if (!is_integer(q)) throw ParseError(path, "expected an integer");
  try {
    return to_int64(q.get_num());
  } catch (const std::exception&) {
    throw ParseError(path, "integer out of range");
  }
}

inline QVec read_qvec(const json& j, const std::string& path) {
  QVec v;
  std::size_t i = 0;
  for (const auto& x : array(j, path)) {
    v.push_back(read_rational(x, path + "/" + std::to_string(i)));
    ++i;
  }
  return v;
}

inline LatticeVector read_lattice_vector(const json& j, const std::string& path) {
  LatticeVector v;
  std::size_t i = 0;
  for (const auto& x : array(j, path)) {
    v.push_back(read_int(x, path + "/" + std::to_string(i)));
    ++i;
  }
  return v;
}

template <class T, class F>
std::vector<T> read_list(const json& j, const std::string& path, F&& read) {
  std::vector<T> out;
  std::size_t i = 0;
  for (const auto& x : array(j, path)) {
    out.push_back(read(x, path + "/" + std::to_string(i)));
    ++i;
  }
  return out;
}

// Semantic errors from constructors are reported with the location too, but
// keep their own type so callers can tell them from syntax errors.
template <class F>
auto at(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

inline Polytope read_polytope(const json& j, const std::string& path) {
  auto verts = read_list<QVec>(field(j, "vertices", path), path + "/vertices", read_qvec);
  return at(path, [&] { return hull(verts); });
}

inline AffineLattice read_lattice(const json& j, const std::string& path) {
  QVec offset = read_qvec(field(j, "offset", path), path + "/offset");
  auto basis = read_list<LatticeVector>(field(j, "basis", path), path + "/basis", read_lattice_vector);
  return at(path, [&] { return AffineLattice(offset, basis); });
}

inline Polynomial read_polynomial(const json& j, const std::string& path) {
  // num_vars may be omitted when there is at least one term.
  const std::string tp = path + "/terms";
  const json& terms = array(field(j, "terms", path), tp);
  int64_t nv = -1;
  if (j.contains("num_vars"))
    nv = read_int(j["num_vars"], path + "/num_vars");
  else if (!terms.empty())
    nv = static_cast<int64_t>(array(field(terms.front(), "exp", tp + "/0"), tp + "/0/exp").size());
  if (nv < 0) throw ParseError(path, "num_vars missing or negative");
  Polynomial p(static_cast<std::size_t>(nv));
  std::size_t i = 0;
  for (const auto& t : terms) {
    const std::string ip = tp + "/" + std::to_string(i++);
    auto e = read_lattice_vector(field(t, "exp", ip), ip + "/exp");
    Rational c = read_rational(field(t, "coef", ip), ip + "/coef");
    Polynomial::Exponent ex(e.begin(), e.end());
    at(ip, [&] {
      p.add_term(ex, c);
      return 0;
    });
  }
  return p;
}

inline FiniteSet read_finite_set(const json& j, const std::string& path) {
  auto pts = read_list<LatticeVector>(field(j, "points", path), path + "/points", read_lattice_vector);
  if (j.contains("lattice")) {
    AffineLattice lat = read_lattice(j["lattice"], path + "/lattice");
    return at(path, [&] { return FiniteSet(pts, lat); });
  }
  return at(path, [&] { return FiniteSet(pts); });
}

inline GroupDescriptor read_group(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  std::vector<int> gl;
  if (j.contains("gl"))
    for (auto v : read_lattice_vector(j["gl"], path + "/gl")) gl.push_back(static_cast<int>(v));
  int torus = j.contains("torus") ? static_cast<int>(read_int(j["torus"], path + "/torus")) : 0;
  return at(path, [&] { return GroupDescriptor(gl, torus); });
}

inline ChamberFace read_face(const GroupDescriptor& g, const json& j, const std::string& path) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  for (const auto& b : array(field(j, "blocks", path), path + "/blocks")) {
    std::vector<int> sizes;
    for (auto v : read_lattice_vector(b, path + "/blocks/" + std::to_string(i))) sizes.push_back(static_cast<int>(v));
    blocks.push_back(std::move(sizes));
    ++i;
  }
  return at(path, [&] { return ChamberFace(g, blocks); });
}

struct Problem {
  HorosphericalSpace space;
  std::vector<SupportSet> supports;
};

// Missing face means the full chamber; missing lambda_H means the face
// lattice. The mode defaults to general exactly when lambda_H is given.
inline Problem read_problem(const json& j) {
  GroupDescriptor g = read_group(field(j, "group", ""), "/group");
  ChamberFace face = j.contains("face") ? read_face(g, j["face"], "/face") : ChamberFace::full(g);
  SpaceMode mode = j.contains("lambda_H") ? SpaceMode::general : SpaceMode::quotient_by_commutator;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw ParseError("/mode", "expected a string");
    mode = at("/mode", [&] { return parse_space_mode(j["mode"].get<std::string>()); });
  }
  AffineLattice lh = j.contains("lambda_H") ? read_lattice(j["lambda_H"], "/lambda_H") : face.lattice();
  HorosphericalSpace space = at("/", [&] { return HorosphericalSpace(face, lh, mode); });
  std::vector<SupportSet> supports;
  std::size_t i = 0;
  for (const auto& s : array(field(j, "supports", ""), "/supports")) {
    const std::string sp = "/supports/" + std::to_string(i++);
    auto ws = read_list<Weight>(s, sp, read_lattice_vector);
    supports.push_back(at(sp, [&] { return SupportSet(space, ws); }));
  }
  return {std::move(space), std::move(supports)};
}

// ---- encoding --------------------------------------------------------------

inline json write(const Rational& q) { return to_string(q); }

inline json write(const QVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json write(const LatticeVector& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline json write(const Polytope& p) {
  json vs = json::array();
  for (const auto& v : p.vertices()) vs.push_back(write(v));
  return {{"vertices", vs}};
}

inline json write(const AffineLattice& l) {
  json b = json::array();
  for (const auto& v : l.basis()) b.push_back(write(v));
  return {{"offset", write(l.offset())}, {"basis", b}};
}

inline json write(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return {{"num_vars", p.num_vars()}, {"terms", terms}};
}

inline json write(const FiniteSet& s) {
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back(write(p));
  return {{"points", pts}, {"lattice", write(s.lattice())}};
}

inline json write(const GroupDescriptor& g) { return {{"gl", g.gl_factors()}, {"torus", g.torus_rank()}}; }

inline json write(const ChamberFace& f) { return {{"blocks", f.blocks()}}; }

inline json write_weights(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(write(w));
  return a;
}

inline json write(const Problem& p) {
  json sup = json::array();
  for (const auto& s : p.supports) sup.push_back(write_weights(s.weights()));
  return {{"group", write(p.space.group())},
          {"face", write(p.space.face())},
          {"lambda_H", write(p.space.lambda_h())},
          {"mode", to_string(p.space.mode())},
          {"supports", sup}};
}

inline json write(const IndexReport& r) {
  json routes = {{"integral", to_string(r.integral)},
                 {"lift", to_string(r.lift)},
                 {"hilbert", r.hilbert ? json(to_string(*r.hilbert)) : json(nullptr)}};
  return {{"index", to_string(r.integral)}, {"routes", routes}};
}

}  // namespace horo::json_io
