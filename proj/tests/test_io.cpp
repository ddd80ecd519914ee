#include <doctest.h>

#include "cslab/json_io.hpp"
#include "cslab/svg.hpp"

using namespace cslab;
using cslab::io::json;

TEST_CASE("path JSON round trip") {
  const auto p = LatticePath::parse("UUUUDUUUUUDUD", 4, PathKind::Augmented);
  const auto j = io::to_json(p);
  CHECK(j.dump() == R"({"k":4,"kind":"augmented","steps":"UUUUDUUUUUDUD"})");
  CHECK(io::path_from_json(j) == p);
  CHECK_THROWS_AS(io::path_from_json(json{{"k", 2}}), InvalidInput);
}

TEST_CASE("permutation and vector JSON") {
  const Permutation p({2, 4, 7, 1, 3, 6, 8, 9, 5});
  CHECK(io::to_json(p).dump() == "[2,4,7,1,3,6,8,9,5]");
  CHECK(io::permutation_from_json(io::to_json(p)) == p);
  CHECK_THROWS_AS(io::permutation_from_json(json::parse("[1,1]")), InvalidInput);
  const IntVector v{3, -2, 1};
  CHECK(io::int_vector_from_json(io::to_json(v)) == v);
}

TEST_CASE("tree JSON round trip") {
  const auto t = build_fs_tree(std::vector<int>{2, 1, 3});
  const auto j = io::tree_to_json(t);
  CHECK(j.dump() == R"({"label":1,"left":{"label":2,"left":null,"right":null},"right":{"label":3,"left":null,"right":null}})");
  CHECK(same_tree(io::tree_from_json(j), t));
  const auto s = io::shape_to_json(t);
  CHECK(s.dump() == R"({"left":{"left":null,"right":null},"right":{"left":null,"right":null}})");
  CHECK(same_tree(io::shape_from_json(s), t.shape()));
}

TEST_CASE("polynomial and series JSON round trip") {
  const auto t = t_series(2, 3, 5);
  const auto j = io::to_json(t);
  CHECK(j["trunc"] == 5);
  CHECK(io::series_from_json(j, 3) == t);
  MultiPoly big(1);
  big.add_term({1}, BigInt("123456789012345678901234567890"));
  CHECK(io::to_json(big).dump() == R"([{"coef":"123456789012345678901234567890","exps":[1]}])");
  CHECK(io::poly_from_json(io::to_json(big), 1) == big);
}

TEST_CASE("orbit JSON round trip") {
  const auto recs = orbits(PermClass::short_csp(), 3);
  const auto j = io::to_json(recs[0]);
  CHECK(j.dump() == R"({"I":[1,2],"rep":[1,2,3],"size":4})");
  const auto back = io::orbit_from_json(j);
  CHECK(back.rep == recs[0].rep);
  CHECK(back.flip_indices == recs[0].flip_indices);
  CHECK(back.size == 4);
}

TEST_CASE("SVG output") {
  const auto path_svg = svg::render_path(LatticePath::parse("UUD", 2, PathKind::Augmented));
  CHECK(path_svg.rfind("<svg", 0) == 0);
  CHECK(path_svg.find("<polyline") != std::string::npos);
  CHECK(path_svg.find("stroke-dasharray") != std::string::npos);
  const auto tree_svg = svg::render_tree(build_fs_tree(std::vector<int>{2, 1, 3}));
  CHECK(tree_svg.find(">3</text>") != std::string::npos);
  CHECK(svg::render_tree(build_fs_tree(std::vector<int>{2, 1, 3})) == tree_svg);
}
