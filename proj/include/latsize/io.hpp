// JSON formats.
//
//   polytope  {"dim": d, "vertices": [[...], ...]}   any generating set on input
//   map       {"A": [[...], ...], "v": [...]}        d x d and d entries
//   basis     {"rows": [...], "norms": [...], "level": "none|reduced|minkowski"}
//   result    {"value": int, "witness": map, "method": str}
//
// Malformed documents raise std::domain_error.

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "latsize/core.hpp"
#include "latsize/generators.hpp"
#include "latsize/latticesize.hpp"
#include "latsize/reduction.hpp"

namespace latsize {

using Json = nlohmann::json;

/// Vertices sorted lexicographically.
Json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);
LatticePolytope read_polytope(std::istream& in);
LatticePolytope read_polytope_file(const std::string& path);

Json to_json(const UnimodularMap& m);
UnimodularMap map_from_json(const Json& j, int dim);

Json to_json(const Basis& b);
Json to_json(const LatticeSizeResult& r);

Json to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const Json& j);

/// 64-bit FNV-1a over the sorted vertex list, as 16 hex digits.
std::string digest(const LatticePolytope& p);

}  // namespace latsize
