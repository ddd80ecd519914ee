#include "cslab/json_io.hpp"

namespace cslab::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace

json to_json(const LatticePath& path) {
  return json{{"k", path.k}, {"kind", std::string(to_string(path.kind))}, {"steps", path.step_string()}};
}

LatticePath path_from_json(const json& j) {
  return LatticePath::parse(field(j, "steps").get<std::string>(), field(j, "k").get<int>(),
                            parse_path_kind(field(j, "kind").get<std::string>()));
}

json to_json(const Permutation& p) { return json(p.vector()); }

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("permutation JSON must be an array");
  return Permutation(j.get<std::vector<int>>());
}

json to_json(const IntVector& v) { return json(v); }

IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("integer vector JSON must be an array");
  return j.get<IntVector>();
}

namespace {

json subtree_to_json(const PlaneTree& t, int v, bool labeled) {
  if (v < 0) return nullptr;
  const auto& node = t.nodes[static_cast<std::size_t>(v)];
  json out = json::object();
  if (labeled) out["label"] = node.label;
  out["left"] = subtree_to_json(t, node.left, labeled);
  out["right"] = subtree_to_json(t, node.right, labeled);
  return out;
}

int subtree_from_json(PlaneTree& t, const json& j, bool labeled) {
  if (j.is_null()) return -1;
  if (!j.is_object()) throw InvalidInput("tree JSON nodes must be objects or null");
  const int idx = static_cast<int>(t.nodes.size());
  t.nodes.push_back({labeled ? field(j, "label").get<int>() : 0, -1, -1});
  const int left = subtree_from_json(t, j.value("left", json(nullptr)), labeled);
  const int right = subtree_from_json(t, j.value("right", json(nullptr)), labeled);
  t.nodes[static_cast<std::size_t>(idx)].left = left;
  t.nodes[static_cast<std::size_t>(idx)].right = right;
  return idx;
}

}  // namespace

json tree_to_json(const PlaneTree& tree) { return subtree_to_json(tree, tree.root, true); }

PlaneTree tree_from_json(const json& j) {
  PlaneTree t;
  t.root = subtree_from_json(t, j, true);
  return t;
}

json shape_to_json(const PlaneTree& tree) { return subtree_to_json(tree, tree.root, false); }

PlaneTree shape_from_json(const json& j) {
  PlaneTree t;
  t.root = subtree_from_json(t, j, false);
  return t;
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coef", c.get_str()}});
  return terms;
}

MultiPoly poly_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) throw InvalidInput("polynomial JSON must be an array of terms");
  MultiPoly p(nvars);
  for (const auto& term : j) {
    BigInt c;
    if (c.set_str(field(term, "coef").get<std::string>(), 10) != 0) throw InvalidInput("bad coefficient");
    p.add_term(field(term, "exps").get<Exponents>(), c);
  }
  return p;
}

json to_json(const TruncatedMultiSeries& s) { return json{{"trunc", s.trunc}, {"terms", to_json(s.poly)}}; }

TruncatedMultiSeries series_from_json(const json& j, std::size_t nvars) {
  return {poly_from_json(field(j, "terms"), nvars), field(j, "trunc").get<int>()};
}

json to_json(const OrbitRecord& rec) {
  json size;
  if (rec.size.fits_slong_p()) {
    size = rec.size.get_si();
  } else {
    size = rec.size.get_str();
  }
  return json{{"rep", rec.rep.vector()}, {"I", rec.flip_indices}, {"size", size}};
}

OrbitRecord orbit_from_json(const json& j) {
  OrbitRecord rec;
  rec.rep = Permutation(field(j, "rep").get<std::vector<int>>());
  rec.flip_indices = field(j, "I").get<std::vector<int>>();
  const auto& size = field(j, "size");
  rec.size = size.is_string() ? BigInt(size.get<std::string>()) : BigInt(size.get<long>());
  return rec;
}

}  // namespace cslab::io
