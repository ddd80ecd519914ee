#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cslab/lattice.hpp"

using namespace cslab;

namespace {

LatticePath path(const char* steps, int k, PathKind kind = PathKind::Catalan) {
  return LatticePath::parse(steps, k, kind);
}

// Every U/D string with the right counts, filtered by the prefix rule and
// listed in lexicographic order with U < D.
std::vector<std::string> brute_force(int n, int k, bool bridges) {
  const int ups = (k - 1) * n;
  std::string s(static_cast<std::size_t>(ups), 'U');
  s.append(static_cast<std::size_t>(n), 'D');
  std::sort(s.begin(), s.end(), [](char a, char b) { return a == 'U' && b == 'D'; });
  std::vector<std::string> out;
  do {
    long h = 0;
    bool ok = true;
    for (char c : s) {
      h += c == 'U' ? 1 : 1 - k;
      ok = ok && (bridges || h >= 0);
    }
    if (ok) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end(), [](char a, char b) { return a == 'U' && b == 'D'; }));
  return out;
}

std::vector<std::string> strings(const std::vector<LatticePath>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(p.step_string());
  return out;
}

const IntVector kSampleVector{3, -2, 1, -3, 2, 1, -1};

}  // namespace

TEST_CASE("fuss_catalan closed form") {
  CHECK(fuss_catalan(0, 2) == 1);
  CHECK(fuss_catalan(4, 2) == 14);
  CHECK(fuss_catalan(3, 4) == 22);
  CHECK(fuss_catalan(10, 2) == 16796);
  // binom(kn+1, n)/(kn+1) as a product formula, independent of the library.
  for (long k = 2; k <= 5; ++k) {
    for (long n = 0; n <= 12; ++n) {
      BigInt num = 1;
      BigInt den = 1;
      for (long i = 0; i < n; ++i) {
        num *= k * n + 1 - i;
        den *= i + 1;
      }
      CHECK(fuss_catalan(n, k) == num / den / (k * n + 1));
    }
  }
}

TEST_CASE("fuss_catalan is exact beyond 64 bits") {
  CHECK(fuss_catalan(40, 2).get_str() == "2622127042276492108820");
}

TEST_CASE("validate checks kind invariants") {
  CHECK(validate(path("UD", 2)));
  CHECK_FALSE(validate(path("DU", 2)));
  CHECK(validate(path("UUUDUUUUUDUD", 4)));
  CHECK(validate(path("UUUUDUUUUUDUD", 4, PathKind::Augmented)));
  CHECK_FALSE(validate(path("UUUDUUUUUDUD", 4, PathKind::Augmented)));
  CHECK(validate(path("DU", 2, PathKind::Bridge)));
  CHECK_FALSE(validate(path("UU", 2, PathKind::Bridge)));
  CHECK(validate(path("", 3)));
  CHECK(validate(path("U", 3, PathKind::Augmented)));
  // Augmented paths may not touch level 0 after the first step.
  CHECK_FALSE(validate(path("UDUUD", 2, PathKind::Augmented)));
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(LatticePath::parse("UXD", 2, PathKind::Catalan), InvalidInput);
  CHECK_THROWS_AS(LatticePath::parse("UD", 1, PathKind::Catalan), InvalidInput);
  CHECK_THROWS_AS(parse_path_kind("loop"), InvalidInput);
  CHECK(parse_path_kind("bridge") == PathKind::Bridge);
  CHECK(to_string(PathKind::Augmented) == "augmented");
}

TEST_CASE("enumerate_catalan matches brute force in order") {
  CHECK(enumerate_catalan(0, 3).size() == 1);
  CHECK(enumerate_catalan(0, 3)[0].steps.empty());
  CHECK(enumerate_catalan(3, 2).size() == 5);
  CHECK(enumerate_catalan(2, 3).size() == 3);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; (k - 1) * n <= 8; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(strings(enumerate_catalan(n, k)) == brute_force(n, k, false));
    }
  }
  CHECK(strings(enumerate_catalan(3, 2)) ==
        std::vector<std::string>{"UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"});
}

TEST_CASE("enumerate_bridges matches brute force in order") {
  CHECK(strings(enumerate_bridges(1, 2)) == std::vector<std::string>{"UD", "DU"});
  CHECK(enumerate_bridges(2, 2).size() == 6);
  CHECK(enumerate_bridges(2, 3).size() == 15);
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; (k - 1) * n <= 6; ++n) {
      CHECK(strings(enumerate_bridges(n, k)) == brute_force(n, k, true));
    }
  }
}

TEST_CASE("augment and deaugment") {
  CHECK(augment(path("", 2)).step_string() == "U");
  CHECK(augment(path("UD", 2)).step_string() == "UUD");
  const auto fig = augment(path("UUUDUUUUUDUD", 4));
  CHECK(fig.step_string() == "UUUUDUUUUUDUD");
  CHECK(fig.kind == PathKind::Augmented);
  CHECK(deaugment(fig) == path("UUUDUUUUUDUD", 4));
  CHECK_THROWS_AS(augment(path("DU", 2)), InvalidInput);
}

TEST_CASE("heights") {
  CHECK(path("UUUUDUUUUUDUD", 4, PathKind::Augmented).heights() ==
        std::vector<long>{1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 3, 4, 1});
}

TEST_CASE("steps_above_axis") {
  CHECK(steps_above_axis(path("UD", 2, PathKind::Bridge)) == 2);
  CHECK(steps_above_axis(path("DU", 2, PathKind::Bridge)) == 0);
  CHECK(steps_above_axis(path("UDDU", 2, PathKind::Bridge)) == 2);
  CHECK_THROWS_AS(steps_above_axis(path("UUD", 3, PathKind::Bridge)), InvalidInput);
}

TEST_CASE("up_steps_below_axis") {
  CHECK(up_steps_below_axis(path("UD", 2, PathKind::Bridge)) == 0);
  CHECK(up_steps_below_axis(path("DU", 2, PathKind::Bridge)) == 1);
  CHECK(up_steps_below_axis(path("DDUU", 2, PathKind::Bridge)) == 2);
  CHECK(up_steps_below_axis(path("DUU", 3, PathKind::Bridge)) == 2);
}

TEST_CASE("Chung-Feller uniformity") {
  for (int n = 0; n <= 7; ++n) {
    std::vector<long> hist(static_cast<std::size_t>(2 * n) + 1, 0);
    visit_bridges(n, 2, [&](const LatticePath& b) { ++hist[static_cast<std::size_t>(steps_above_axis(b))]; });
    for (int v = 0; v <= 2 * n; ++v) {
      CHECK(BigInt(hist[static_cast<std::size_t>(v)]) == (v % 2 == 0 ? fuss_catalan(n, 2) : BigInt(0)));
    }
  }
}

TEST_CASE("Huq uniformity") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 4; ++n) {
      std::vector<long> hist(static_cast<std::size_t>((k - 1) * n) + 1, 0);
      visit_bridges(n, k, [&](const LatticePath& b) { ++hist[static_cast<std::size_t>(up_steps_below_axis(b))]; });
      for (long c : hist) CHECK(BigInt(c) == fuss_catalan(n, k));
    }
  }
}

TEST_CASE("huq_statistic and profile") {
  const IntVector v{1, 1, -1};
  CHECK(huq_statistic(v, 0) == 2);
  CHECK(huq_statistic(v, 1) == 1);
  CHECK(huq_statistic(v, 2) == 0);
  CHECK(huq_profile(IntVector{1}) == std::vector<int>{0});
  auto p = huq_profile(kSampleVector);
  std::sort(p.begin(), p.end());
  CHECK(p == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(huq_profile(IntVector{1, 1}), InvalidInput);
  CHECK_THROWS_AS(huq_statistic(v, 3), InvalidInput);
}

TEST_CASE("spitzer_profile") {
  const std::vector<Rational> half{Rational(1, 2), Rational(-1, 2)};
  CHECK(spitzer_profile(half) == std::vector<int>{1, 0});
  const auto shifted = spitzer_shift(IntVector{1, 1, -1});
  CHECK(shifted == std::vector<Rational>{Rational(2, 3), Rational(2, 3), Rational(-4, 3)});
  CHECK(spitzer_profile(shifted) == std::vector<int>{2, 1, 0});
  auto p = spitzer_profile(spitzer_shift(kSampleVector));
  std::sort(p.begin(), p.end());
  CHECK(p == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("spitzer_profile reports a vanishing window") {
  const std::vector<Rational> bad{Rational(1), Rational(-1), Rational(1), Rational(-1)};
  try {
    spitzer_profile(bad);
    FAIL("expected VanishingWindow");
  } catch (const VanishingWindow& e) {
    CHECK(e.length < 4);
  }
  CHECK_THROWS_AS(spitzer_profile(std::vector<Rational>{Rational(1), Rational(1)}), InvalidInput);
}

TEST_CASE("functional_order") {
  const std::vector<LatticePoint> expected{{4, -1}, {0, 0}, {5, 1}, {2, 1}, {6, 2}, {3, 2}, {1, 3}};
  CHECK(functional_order(kSampleVector) == expected);
  CHECK(functional_order(IntVector{1}) == std::vector<LatticePoint>{{0, 0}});
  CHECK(functional_order(IntVector{2, -1}) == std::vector<LatticePoint>{{0, 0}, {1, 2}});
}

TEST_CASE("cyclic-shift statistics over the exhaustive universe") {
  // All vectors with entries in [-3,3], length <= 5, sum 1. Length 6 runs in the verify suite.
  for (int m = 1; m <= 5; ++m) {
    IntVector v(static_cast<std::size_t>(m), -3);
    while (true) {
      if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) == 1) {
        auto profile = huq_profile(v);
        // Oracle: positive partial sums computed by hand for each shift.
        for (std::size_t s = 0; s < v.size(); ++s) {
          std::int64_t sum = 0;
          int positive = 0;
          for (std::size_t l = 1; l < v.size(); ++l) {
            sum += v[(s + l - 1) % v.size()];
            positive += sum > 0;
          }
          REQUIRE(profile[s] == positive);
        }
        REQUIRE(spitzer_profile(spitzer_shift(v)) == profile);
        std::sort(profile.begin(), profile.end());
        for (int i = 0; i < m; ++i) REQUIRE(profile[static_cast<std::size_t>(i)] == i);
      }
      std::size_t i = 0;
      while (i < v.size() && v[i] == 3) v[i++] = -3;
      if (i == v.size()) break;
      ++v[i];
    }
  }
}
