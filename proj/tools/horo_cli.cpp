// horo: intersection indices on horospherical spaces from the command line.
//
// Exit codes: 0 ok, 2 parse error, 3 semantic error, 4 route disagreement
// or failed verification.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "horo/json_io.hpp"
#include "horo/verify.hpp"

using namespace horo;
using json_io::json;

namespace {

constexpr int kParseError = 2;
constexpr int kSemanticError = 3;
constexpr int kDisagreement = 4;

struct Disagreement : std::runtime_error {
  json report;
  Disagreement(const std::string& what, json r) : std::runtime_error(what), report(std::move(r)) {}
};

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw json_io::ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return json_io::parse_text(ss.str(), path);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void diagnose(const std::string& kind, const std::string& message, const std::string& where = "") {
  json d = {{"error", kind}, {"message", message}};
  if (!where.empty()) d["location"] = where;
  std::cerr << d.dump() << "\n";
}

LatticeVector parse_int_list(const std::string& s, const std::string& what) {
  LatticeVector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw json_io::ParseError(what, "expected comma-separated integers, got '" + s + "'");
    }
  }
  return out;
}

std::vector<Polytope> read_bodies(const json& j) {
  return json_io::read_list<Polytope>(json_io::field(j, "bodies", ""), "/bodies", json_io::read_polytope);
}

// Direction lattice of a body system; defaults to the standard lattice.
AffineLattice read_directions(const json& j, std::size_t n) {
  if (j.contains("lattice")) return json_io::read_lattice(j["lattice"], "/lattice");
  return AffineLattice::standard(n);
}

int cmd_index(const std::string& file, unsigned workers) {
  auto problem = json_io::read_problem(load(file));
  IndexReport r = compute_index(problem.space, problem.supports, workers);
  json out = json_io::write(r);
  if (!r.agree) {
    out["error"] = "route disagreement";
    throw Disagreement("routes disagree", out);
  }
  emit(out);
  return 0;
}

int cmd_moment(const std::string& file) {
  auto problem = json_io::read_problem(load(file));
  json polys = json::array();
  for (const auto& s : problem.supports) polys.push_back(json_io::write(moment_polytope(s)));
  emit({{"moment_polytopes", polys}});
  return 0;
}

int cmd_newton(const std::string& file) {
  auto problem = json_io::read_problem(load(file));
  json polys = json::array();
  for (const auto& s : problem.supports)
    polys.push_back(json_io::write(newton_lift(problem.space.face(), s.block_polytope())));
  emit({{"newton_polytopes", polys},
        {"lattice", json_io::write(lift_lattice(problem.space.face(), problem.space.lambda_h()))}});
  return 0;
}

int cmd_completion(const std::string& file) {
  auto problem = json_io::read_problem(load(file));
  json sets = json::array();
  for (const auto& s : problem.supports) sets.push_back(json_io::write_weights(completion_support(s).weights()));
  emit({{"completions", sets}});
  return 0;
}

int cmd_weyl(const std::string& gl, int torus, const std::string& weight, const std::string& blocks) {
  std::vector<int> factors;
  if (!gl.empty())
    for (auto v : parse_int_list(gl, "--gl")) factors.push_back(static_cast<int>(v));
  GroupDescriptor g(factors, torus);
  json out = {{"polynomial", json_io::write(weyl_polynomial(g))},
              {"positive_roots", g.positive_roots()},
              {"rank", g.rank()}};
  if (!weight.empty()) out["dimension"] = dim_irrep(g, parse_int_list(weight, "--weight")).get_str();
  if (!blocks.empty()) {
    // Blocks per factor separated by ';', sizes by ','.
    std::vector<std::vector<int>> bl;
    std::stringstream ss(blocks);
    std::string part;
    while (std::getline(ss, part, ';')) {
      std::vector<int> sizes;
      for (auto v : parse_int_list(part, "--blocks")) sizes.push_back(static_cast<int>(v));
      bl.push_back(std::move(sizes));
    }
    ChamberFace face(g, bl);
    auto rw = restricted_weyl(face);
    out["restricted"] = json_io::write(rw.restricted);
    out["top"] = json_io::write(rw.top);
  }
  emit(out);
  return 0;
}

int cmd_gc(int n, const std::string& weight, bool count) {
  Weight w = parse_int_list(weight, "--weight");
  if (count) {
    std::cout << gt_lattice_count(n, w).get_str() << "\n";
    return 0;
  }
  GTPolytope p = gt_polytope(n, w);
  json out = json_io::write(p.polytope);
  out["dim"] = p.polytope.dim();
  out["volume"] = to_string(volume(p.polytope, AffineLattice::standard(gt_size(n))));
  out["lattice_points"] = gt_lattice_count(n, w).get_str();
  emit(out);
  return 0;
}

int cmd_mixed_volume(const std::string& file, unsigned workers) {
  json j = load(file);
  auto bodies = read_bodies(j);
  if (bodies.empty()) throw json_io::ParseError("/bodies", "need at least one body");
  AffineLattice dirs = read_directions(j, bodies.front().ambient_dim());
  emit(to_string(mixed_volume(BodySystem(bodies, dirs), workers)));
  return 0;
}

int cmd_mixed_integral(const std::string& file, unsigned workers) {
  json j = load(file);
  Polynomial f = json_io::read_polynomial(json_io::field(j, "polynomial", ""), "/polynomial");
  auto bodies = read_bodies(j);
  AffineLattice dirs = read_directions(j, f.num_vars());
  emit(to_string(mixed_integral(f, BodySystem(bodies, dirs), workers)));
  return 0;
}

int cmd_hilbert(const std::string& file, int max_k) {
  auto problem = json_io::read_problem(load(file));
  if (problem.supports.empty()) throw json_io::ParseError("/supports", "need at least one support");
  const auto& a = problem.supports.front();
  if (max_k < 0) max_k = static_cast<int>(problem.space.arity()) + problem.space.phi().total_degree() + 1;
  json values = json::array();
  for (int k = 0; k <= max_k; ++k) values.push_back(hilbert_function(a, k).get_str());
  emit({{"values", values}, {"self_index", to_string(self_index_via_hilbert(a))}});
  return 0;
}

int cmd_verify(const std::vector<std::string>& files, int count, std::uint64_t seed, unsigned workers) {
  verify::Rng rng(seed);
  std::vector<verify::Instance> instances;
  for (const auto& f : files) {
    auto p = json_io::read_problem(load(f));
    instances.push_back({std::filesystem::path(f).filename().string(), p.space, p.supports});
  }
  for (int i = 0; i < count; ++i) instances.push_back(verify::random_instance(rng));
  std::size_t passed = 0, failed = 0;
  json failures = json::array();
  for (const auto& inst : instances) {
    for (const auto& c : verify::check_instance(inst, rng, workers)) {
      if (c.ok) {
        ++passed;
      } else {
        ++failed;
        failures.push_back({{"check", c.name}, {"detail", c.detail}});
      }
    }
  }
  json out = {{"instances", instances.size()}, {"passed", passed}, {"failed", failed}, {"failures", failures}};
  if (failed) throw Disagreement("verification failed", out);
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection indices on horospherical spaces"};
  app.require_subcommand(1);
  unsigned workers = 1;
  app.add_option("--parallel", workers, "worker threads for subset sums")->check(CLI::PositiveNumber);

  std::string file;
  auto* index = app.add_subcommand("index", "intersection index by all routes");
  index->add_option("problem", file, "problem JSON")->required();
  auto* moment = app.add_subcommand("moment", "moment polytopes of the supports");
  moment->add_option("problem", file)->required();
  auto* newton = app.add_subcommand("newton", "Newton polytopes lifted by Gelfand-Cetlin fibres");
  newton->add_option("problem", file)->required();
  auto* completion = app.add_subcommand("completion", "completions of the supports");
  completion->add_option("problem", file)->required();

  std::string gl, weight, blocks;
  int torus = 0;
  auto* weyl = app.add_subcommand("weyl", "Weyl dimension polynomial");
  weyl->add_option("--gl", gl, "GL factor sizes, e.g. 3 or 2,2");
  weyl->add_option("--torus", torus, "torus rank");
  weyl->add_option("--weight", weight, "dominant weight for a dimension");
  weyl->add_option("--blocks", blocks, "face blocks, e.g. '1,2' or '1,1;2'");

  int n = 0;
  bool count = false;
  auto* gc = app.add_subcommand("gc", "Gelfand-Cetlin polytope of a GL(n) weight");
  gc->add_option("--n", n)->required();
  gc->add_option("--weight", weight)->required();
  gc->add_flag("--count", count, "print only the number of integral patterns");

  auto* mv = app.add_subcommand("mixed-volume", "mixed volume of a body system");
  mv->add_option("bodies", file)->required();
  auto* mi = app.add_subcommand("mixed-integral", "mixed integral of a homogeneous polynomial");
  mi->add_option("problem", file)->required();

  int max_k = -1;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the first support");
  hilbert->add_option("problem", file)->required();
  hilbert->add_option("--k", max_k, "largest k to print");

  std::vector<std::string> files;
  int random_count = 50;
  std::uint64_t seed = 1;
  auto* ver = app.add_subcommand("verify", "property battery on problem files and random instances");
  ver->add_option("problems", files, "problem JSON files");
  ver->add_option("--random", random_count, "number of random instances")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParseError;
  }

  try {
    if (*index) return cmd_index(file, workers);
    if (*moment) return cmd_moment(file);
    if (*newton) return cmd_newton(file);
    if (*completion) return cmd_completion(file);
    if (*weyl) return cmd_weyl(gl, torus, weight, blocks);
    if (*gc) return cmd_gc(n, weight, count);
    if (*mv) return cmd_mixed_volume(file, workers);
    if (*mi) return cmd_mixed_integral(file, workers);
    if (*hilbert) return cmd_hilbert(file, max_k);
    if (*ver) return cmd_verify(files, random_count, seed, workers);
  } catch (const json_io::ParseError& e) {
    diagnose("parse", e.what(), e.where());
    return kParseError;
  } catch (const Disagreement& e) {
    std::cout << e.report.dump(2) << "\n";
    diagnose("disagreement", e.what());
    return kDisagreement;
  } catch (const ValidationError& e) {
    diagnose("validation", e.what());
    return kDisagreement;
  } catch (const std::exception& e) {
    diagnose("semantic", e.what());
    return kSemanticError;
  }
  return 0;
}
