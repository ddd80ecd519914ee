#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cslab/fstree.hpp"
#include "cslab/spitzer.hpp"

using namespace cslab;

namespace {

const char* const kSampleAugmented = "UUUUDUUUUUDUD";
const char* const kSampleCatalan = "UUUDUUUUUDUD";

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

// Ranks of the tilted heights, sorted by hand with exact rationals.
std::vector<int> rank_oracle(const LatticePath& aug) {
  const auto h = aug.heights();
  const long m = static_cast<long>(h.size());
  std::vector<Rational> z;
  for (long i = 0; i < m; ++i) z.push_back(Rational(m * h[static_cast<std::size_t>(i)] - (i + 1), aug.k));
  std::vector<int> out;
  for (const auto& a : z) {
    out.push_back(1 + static_cast<int>(std::count_if(z.begin(), z.end(), [&](const Rational& b) { return b < a; })));
  }
  return out;
}

// Direct labeling: sort up steps by (start height, position descending).
std::vector<int> label_oracle(const LatticePath& p) {
  std::vector<std::pair<long, long>> ups;
  long h = 0;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i] == Step::Up) ups.push_back({h, -static_cast<long>(i)});
    h += p.steps[i] == Step::Up ? 1 : 1 - p.k;
  }
  auto sorted = ups;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (const auto& u : ups) {
    out.push_back(1 + static_cast<int>(std::find(sorted.begin(), sorted.end(), u) - sorted.begin()));
  }
  return out;
}

}  // namespace

TEST_CASE("tilt on the sample 4-Catalan path") {
  const auto z = tilt(LatticePath::parse(kSampleAugmented, 4, PathKind::Augmented));
  CHECK(z.k == 4);
  CHECK(z.n == 3);
  REQUIRE(z.zprime.size() == 13);
  CHECK(z.zprime[0] == 3);
  CHECK(z.zprime[4] == 2);
  CHECK(z.zprime[12] == 0);
  const auto small = tilt(LatticePath::parse("UUD", 2, PathKind::Augmented));
  CHECK(small.zprime == std::vector<Rational>{Rational(1), Rational(2), Rational(0)});
  CHECK_THROWS_AS(tilt(LatticePath::parse("UD", 2, PathKind::Augmented)), InvalidInput);
}

TEST_CASE("full_csp") {
  const auto fig = LatticePath::parse(kSampleAugmented, 4, PathKind::Augmented);
  CHECK(full_csp(fig) == perm({3, 5, 8, 11, 2, 4, 7, 10, 12, 13, 6, 9, 1}));
  CHECK(full_csp(LatticePath::parse("UUD", 2, PathKind::Augmented)) == perm({2, 3, 1}));
  CHECK(full_csp(LatticePath::parse("UUUDD", 2, PathKind::Augmented)) == perm({2, 4, 5, 3, 1}));
  CHECK(full_csp(LatticePath::parse("U", 3, PathKind::Augmented)) == perm({1}));
}

TEST_CASE("ascent_set and pattern") {
  const std::vector<int> fig{3, 5, 8, 11, 2, 4, 7, 10, 12, 13, 6, 9, 1};
  CHECK(ascent_set(fig) == std::vector<int>{1, 2, 3, 5, 6, 7, 8, 9, 11});
  CHECK(ascent_set(std::vector<int>{1, 2, 3, 4}) == std::vector<int>{1, 2, 3});
  CHECK(ascent_set(std::vector<int>{4, 3, 2, 1}).empty());
  CHECK(pattern(std::vector<int>{3, 5, 8, 2, 4, 7, 10, 12, 6}) == perm({2, 4, 7, 1, 3, 6, 8, 9, 5}));
  CHECK(pattern(std::vector<int>{-4, 7, 30}) == Permutation::identity(3));
  CHECK(pattern(std::vector<int>{9, 1}) == perm({2, 1}));
  CHECK_THROWS_AS(pattern(std::vector<int>{2, 2}), InvalidInput);
}

TEST_CASE("short_csp examples") {
  const auto fig = LatticePath::parse(kSampleCatalan, 4, PathKind::Catalan);
  CHECK(short_csp(fig) == perm({2, 4, 7, 1, 3, 6, 8, 9, 5}));
  CHECK(short_csp_from_full(fig) == perm({2, 4, 7, 1, 3, 6, 8, 9, 5}));
  CHECK(short_csp(LatticePath::parse("UUUDDD", 2, PathKind::Catalan)) == Permutation::identity(3));
  CHECK(short_csp(LatticePath::parse("UDUDUD", 2, PathKind::Catalan)) == perm({3, 2, 1}));
  CHECK(short_csp(LatticePath::parse("", 2, PathKind::Catalan)).empty());
}

TEST_CASE("reconstruct examples and errors") {
  CHECK(reconstruct(perm({2, 4, 7, 1, 3, 6, 8, 9, 5}), 4).step_string() == kSampleCatalan);
  CHECK(reconstruct(Permutation::identity(4), 2).step_string() == "UUUUDDDD");
  CHECK(reconstruct(Permutation(), 3).steps.empty());
  CHECK_THROWS_AS(reconstruct(perm({3, 1, 2}), 2), InvalidInput);
  // Levelwise but a right chain of one vertex: not a 3-CSP.
  CHECK_THROWS_AS(reconstruct(perm({1}), 3), InvalidInput);
  CHECK(reconstruct(perm({1, 3, 4, 2}), 3).step_string() == "UUUDUD");
}

TEST_CASE("path_type") {
  CHECK(path_type(LatticePath::parse(kSampleAugmented, 4, PathKind::Augmented)) == TypeVector{3, 2, 3, 3, 1, 1});
  CHECK(path_type(LatticePath::parse("UUD", 2, PathKind::Augmented)) == TypeVector{2, 1});
  CHECK(path_type(LatticePath::parse("U", 2, PathKind::Augmented)) == TypeVector{1});
}

TEST_CASE("parse_catalan_or_augmented") {
  CHECK(parse_catalan_or_augmented(kSampleAugmented, 4).kind == PathKind::Augmented);
  CHECK(parse_catalan_or_augmented(kSampleCatalan, 4).kind == PathKind::Catalan);
  CHECK_THROWS_AS(parse_catalan_or_augmented("UUUD", 2), InvalidInput);
}

TEST_CASE("exhaustive spitzer properties") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= (k == 2 ? 8 : 5); ++n) {
      CAPTURE(k);
      CAPTURE(n);
      std::set<Permutation> seen;
      std::map<TypeVector, long> types;
      long count = 0;
      visit_catalan(n, k, [&](const LatticePath& p) {
        ++count;
        const auto aug = augment(p);
        const auto full = full_csp(aug);
        REQUIRE(full.vector() == rank_oracle(aug));
        REQUIRE(full.vector().back() == 1);
        const auto s = short_csp(p);
        REQUIRE(s.vector() == label_oracle(p));
        REQUIRE(short_csp_from_full(p) == s);
        REQUIRE(seen.insert(s).second);
        REQUIRE(reconstruct(s, k) == p);
        const auto lv = levels(build_fs_tree(s.values()));
        const auto ul = up_step_levels(p);
        for (std::size_t i = 0; i < s.size(); ++i) REQUIRE(lv.at(s[i]) == ul[i]);
        const auto t = path_type(aug);
        long total = 0;
        for (int c : t) total += c;
        REQUIRE(total == k * n + 1);
        ++types[t];
      });
      long sum = 0;
      for (const auto& [t, c] : types) sum += c;
      CHECK(BigInt(sum) == fuss_catalan(n, k));
      CHECK(BigInt(count) == fuss_catalan(n, k));
    }
  }
}
