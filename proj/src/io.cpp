#include "latsize/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace latsize {
namespace {

Json row(const IntVec& x, int dim) {
  Json out = Json::array();
  for (int i = 0; i < dim; ++i) out.push_back(x[static_cast<std::size_t>(i)]);
  return out;
}

IntVec vec_from_json(const Json& j, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw std::domain_error(std::string(what) + ": expected an array of " + std::to_string(dim) + " integers");
  }
  IntVec out = kZero;
  for (int i = 0; i < dim; ++i) {
    const Json& e = j[static_cast<std::size_t>(i)];
    if (!e.is_number_integer()) throw std::domain_error(std::string(what) + ": entries must be integers");
    out[static_cast<std::size_t>(i)] = e.get<Int>();
  }
  return out;
}

int dim_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::domain_error("polytope: missing integer field 'dim'");
  }
  const int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 3) throw std::domain_error("polytope: dim must be 2 or 3");
  return dim;
}

Json range_to_json(const CountRange& r) { return Json::array({r.lo, r.hi}); }

CountRange range_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::domain_error("GenSpec: count range must be [lo, hi]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Json to_json(const LatticePolytope& p) {
  Json verts = Json::array();
  for (const IntVec& v : p.vertices()) verts.push_back(row(v, p.dim()));
  return {{"dim", p.dim()}, {"vertices", verts}};
}

LatticePolytope polytope_from_json(const Json& j) {
  const int dim = dim_from_json(j);
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty()) {
    throw std::domain_error("polytope: 'vertices' must be a nonempty array");
  }
  std::vector<IntVec> pts;
  for (const Json& v : j["vertices"]) pts.push_back(vec_from_json(v, dim, "polytope vertex"));
  return convex_hull(dim, pts);
}

LatticePolytope read_polytope(std::istream& in) {
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw std::domain_error(std::string("polytope: invalid JSON: ") + e.what());
  }
  return polytope_from_json(j);
}

LatticePolytope read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_polytope(in);
}

Json to_json(const UnimodularMap& m) {
  Json a = Json::array();
  for (int i = 0; i < m.dim(); ++i) a.push_back(row(m.matrix()[static_cast<std::size_t>(i)], m.dim()));
  return {{"A", a}, {"v", row(m.shift(), m.dim())}};
}

UnimodularMap map_from_json(const Json& j, int dim) {
  if (!j.is_object() || !j.contains("A") || !j.contains("v") || !j["A"].is_array() ||
      static_cast<int>(j["A"].size()) != dim) {
    throw std::domain_error("map: expected {\"A\": [...], \"v\": [...]}");
  }
  IntMat a = identity_matrix();
  for (int i = 0; i < dim; ++i) {
    a[static_cast<std::size_t>(i)] = vec_from_json(j["A"][static_cast<std::size_t>(i)], dim, "map row");
  }
  return UnimodularMap(dim, a, vec_from_json(j["v"], dim, "map shift"));
}

Json to_json(const Basis& b) {
  Json rows = Json::array(), norms = Json::array();
  for (int i = 0; i < b.dim; ++i) {
    rows.push_back(row(b.rows[static_cast<std::size_t>(i)], b.dim));
    norms.push_back(b.norms[static_cast<std::size_t>(i)]);
  }
  return {{"rows", rows}, {"norms", norms}, {"level", to_string(b.level)}};
}

Json to_json(const LatticeSizeResult& r) {
  return {{"value", r.value}, {"witness", to_json(r.witness)}, {"method", to_string(r.method)}};
}

Json to_json(const GenSpec& spec) {
  return {{"kind", to_string(spec.kind)}, {"bound", spec.bound},       {"n0", range_to_json(spec.n0)},
          {"n1", range_to_json(spec.n1)}, {"n", range_to_json(spec.n)}, {"seed", spec.seed}};
}

GenSpec gen_spec_from_json(const Json& j) {
  GenSpec spec;
  try {
    spec.kind = gen_kind_from_string(j.at("kind").get<std::string>());
    spec.bound = j.at("bound").get<Int>();
    spec.n0 = range_from_json(j.at("n0"));
    spec.n1 = range_from_json(j.at("n1"));
    spec.n = range_from_json(j.at("n"));
    spec.seed = j.at("seed").get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw std::domain_error(std::string("GenSpec: ") + e.what());
  }
  validate(spec);
  return spec;
}

std::string digest(const LatticePolytope& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(p.dim()));
  for (const IntVec& v : p.vertices())
    for (Int c : v) mix(static_cast<std::uint64_t>(c));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace latsize
