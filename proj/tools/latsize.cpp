// latsize: lattice width and lattice size of lattice polytopes.
// Exit status: 0 success, 2 precondition violation, 1 any other failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "latsize/harness.hpp"
#include "latsize/io.hpp"
#include "latsize/latticesize.hpp"

using namespace latsize;

namespace {

LatticePolytope load(const std::string& path) { return path == "-" ? read_polytope(std::cin) : read_polytope_file(path); }

CountRange parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::domain_error("invalid count range '" + s + "', expected A..B");
  }
}

void emit(const Json& j, bool quiet) {
  if (quiet) std::cout << j.at("value").get<Int>() << '\n';
  else std::cout << j.dump(2) << '\n';
}

Json width_json(const LatticePolytope& p) {
  const auto [w, dir] = lattice_width(p);
  UnimodularMap witness = UnimodularMap::identity(p.dim());
  if (p.full_dimensional()) {
    const Basis b = p.dim() == 2 ? gauss_reduce_2d(p, make_basis(p, identity_matrix())) : minkowski_basis(p);
    witness = b.as_map();
    witness = witness.then(UnimodularMap::translation(p.dim(), min_corner_shift(transform(p.vertices(), witness), p.dim())));
  }
  Json direction = Json::array();
  for (int i = 0; i < p.dim(); ++i) direction.push_back(dir.vec()[static_cast<std::size_t>(i)]);
  return {{"value", w}, {"witness", to_json(witness)}, {"method", "width"}, {"direction", direction}};
}

LatticeSizeResult run_ls(const LatticePolytope& p, const std::string& method, unsigned threads) {
  if (method == "auto") return lattice_size_auto(p, threads);
  if (method == "brute") return ls_bruteforce(p, {.threads = threads});
  if (method == "slab") return ls_width_one(p);
  if (method == "reduced") return reduced_search(p);
  if (method == "2d") return ls_delta_2d(p);
  if (method == "interior") {
    if (auto r = ls_interior_class(p)) return *r;
    throw std::domain_error("interior: the upper layer does not fit in the interior hull of the lower layer");
  }
  throw std::domain_error("unknown method '" + method + "'");
}

Json reduce_json(const LatticePolytope& p, const std::string& level) {
  Basis b;
  if (p.dim() == 2) {
    if (level != "reduced") throw std::domain_error("planar reduction supports level 'reduced' only");
    b = gauss_reduce_2d(p, make_basis(p, identity_matrix()));
  } else {
    b = level == "minkowski" ? minkowski_basis(p) : reduce_basis_3d(p);
  }
  Json j = to_json(b);
  j["value"] = b.norms[static_cast<std::size_t>(b.dim - 1)];
  j["witness"] = to_json(b.as_map());
  j["method"] = "reduce";
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice width and lattice size of lattice polytopes in dimensions 2 and 3"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Print only the integer value");

  std::string file;
  auto* width = app.add_subcommand("width", "Lattice width");
  width->add_option("FILE", file, "Polytope JSON, or - for stdin")->required();

  std::string method = "auto";
  unsigned threads = 1;
  auto* ls = app.add_subcommand("ls", "Lattice size with respect to the standard simplex");
  ls->add_option("FILE", file, "Polytope JSON, or - for stdin")->required();
  ls->add_option("--method", method, "Algorithm")
      ->check(CLI::IsMember({"auto", "brute", "slab", "reduced", "interior", "2d"}));
  ls->add_option("--threads", threads, "Brute-force workers")->check(CLI::Range(1u, 256u));

  std::string level = "reduced";
  auto* reduce = app.add_subcommand("reduce", "Reduce the standard basis with respect to the polytope");
  reduce->add_option("FILE", file, "Polytope JSON, or - for stdin")->required();
  reduce->add_option("--level", level, "reduced or minkowski")->check(CLI::IsMember({"reduced", "minkowski"}));

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  Int p = 0, q = 0, bound = 7;
  std::uint64_t seed = 0;
  std::string n0 = "5..8", n1, n = "10..15";
  auto* gen_white = gen->add_subcommand("white", "conv{e1, e2, e3, (p, q, 1)}");
  gen_white->add_option("-p", p)->required();
  gen_white->add_option("-q", q)->required();
  auto* gen_w1 = gen->add_subcommand("width-one", "Two random polygons in x = 0 and x = 1");
  gen_w1->add_option("--bound", bound);
  gen_w1->add_option("--n0", n0, "Point count range A..B");
  gen_w1->add_option("--n1", n1, "Point count range A..B (default 5..8)");
  gen_w1->add_option("--seed", seed);
  auto* gen_random = gen->add_subcommand("random", "Hull of random points in a box");
  gen_random->add_option("--bound", bound);
  gen_random->add_option("--n", n, "Point count range A..B");
  gen_random->add_option("--seed", seed);
  auto* gen_par = gen->add_subcommand("parallelepiped", "Random empty parallelepiped of width one");
  gen_par->add_option("--bound", bound);
  gen_par->add_option("--seed", seed);
  auto* gen_interior = gen->add_subcommand("interior", "Random width-one polytope of the interior class");
  gen_interior->add_option("--bound", bound);
  gen_interior->add_option("--n0", n0, "Lower layer point count range A..B");
  gen_interior->add_option("--n1", n1, "Upper layer point count range A..B (default 1..3)");
  gen_interior->add_option("--seed", seed);

  ExperimentConfig config;
  std::string out;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment and write a JSON report");
  experiment->add_option("ID", config.id, "1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
  experiment->add_option("--trials", config.trials)->check(CLI::PositiveNumber);
  experiment->add_option("--seed", config.seed);
  experiment->add_option("--bound", config.bound, "Experiment 3 batch: 7 or 3")->check(CLI::IsMember({3, 7}));
  experiment->add_option("--workers", config.workers)->check(CLI::Range(1u, 256u));
  experiment->add_option("--out", out, "Report path (default stdout)");

  auto* verify = app.add_subcommand("verify-counterexample", "Check the width-one counterexample");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*width) {
      emit(width_json(load(file)), quiet);
    } else if (*ls) {
      emit(to_json(run_ls(load(file), method, threads)), quiet);
    } else if (*reduce) {
      emit(reduce_json(load(file), level), quiet);
    } else if (*gen) {
      GenSpec spec;
      spec.bound = bound;
      spec.seed = seed;
      LatticePolytope poly;
      if (*gen_white) {
        poly = white_tetrahedron(p, q);
      } else {
        if (*gen_w1) spec.kind = GenKind::width_one;
        if (*gen_random) spec.kind = GenKind::general;
        if (*gen_par) spec.kind = GenKind::parallelepiped;
        if (*gen_interior) spec.kind = GenKind::interior;
        spec.n0 = parse_range(n0);
        spec.n1 = parse_range(n1.empty() ? (*gen_interior ? "1..3" : "5..8") : n1);
        spec.n = parse_range(n);
        poly = generate(spec);
      }
      std::cout << to_json(poly).dump() << '\n';
    } else if (*experiment) {
      const Json report = to_json(run_experiment(config));
      if (out.empty()) {
        std::cout << report.dump(2) << '\n';
      } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write '" + out + "'");
        f << report.dump(2) << '\n';
        if (!quiet) std::cout << report["summary"].dump(2) << '\n';
      }
    } else if (*verify) {
      const CounterexampleReport report = verify_counterexample();
      if (!quiet) std::cout << to_json(report).dump(2) << '\n';
      return report.passed() ? 0 : 1;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "latsize: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "latsize: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
