#include <doctest.h>

#include <complex>
#include <map>

#include "cslab/series.hpp"

using namespace cslab;

namespace {

MultiPoly x(std::size_t nvars, std::size_t i) { return MultiPoly::variable(nvars, i); }
MultiPoly one(std::size_t nvars) { return MultiPoly::constant(nvars, 1); }

// Subsets of [r] whose maximal runs all have length divisible by k.
MultiPoly q_oracle(int k, int r) {
  MultiPoly out(static_cast<std::size_t>(r));
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    bool ok = true;
    int run = 0;
    int size = 0;
    for (int i = 0; i <= r; ++i) {
      if (i < r && (mask >> i & 1U)) {
        ++run;
        ++size;
      } else {
        ok = ok && run % k == 0;
        run = 0;
      }
    }
    if (!ok) continue;
    Exponents e(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(mask >> i & 1U);
    out.add_term(e, (size / k) % 2 == 0 ? BigInt(1) : BigInt(-1));
  }
  return out;
}

}  // namespace

TEST_CASE("MultiPoly arithmetic and formatting") {
  const auto a = x(2, 1) + one(2);
  const auto b = x(2, 2) - one(2);
  CHECK((a * b).to_string() == "-1 - x1 + x2 + x1*x2");
  CHECK((a * a).coefficient({1, 0}) == 2);
  CHECK((a - a).is_zero());
  CHECK((-a).coefficient({0, 0}) == -1);
  CHECK(MultiPoly::monomial_range(4, 2, 3).to_string() == "x2*x3");
  CHECK(MultiPoly::multiply_truncated(a, a * a, 2).total_degree() == 2);
  CHECK((a * a * a).homogeneous(2).to_string() == "3*x1^2");
  CHECK_THROWS_AS(a + x(3, 1), InvalidInput);
}

TEST_CASE("MultiPoly evaluation") {
  const auto p = x(2, 1) * x(2, 2) - MultiPoly::constant(2, 2);
  const std::vector<Rational> pt{Rational(1, 2), Rational(3)};
  CHECK(p.evaluate<Rational>(pt, Rational(1), [](const BigInt& c) { return Rational(c); }) == Rational(-1, 2));
}

TEST_CASE("type_count examples") {
  CHECK(type_count({1}, 2) == 1);
  CHECK(type_count({1}, 5) == 1);
  CHECK(type_count({2, 1}, 2) == 1);
  CHECK(type_count({1, 2}, 2) == 0);
  CHECK(type_count({2}, 2) == 0);
  CHECK(type_count({3, 2, 3, 3, 1, 1}, 4) >= 1);
}

TEST_CASE("type_count matches the path census") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= (k == 2 ? 6 : 4); ++n) {
      std::map<TypeVector, long> census;
      visit_catalan(n, k, [&](const LatticePath& p) { ++census[path_type(augment(p))]; });
      for (const auto& [t, c] : census) REQUIRE(type_count(t, k) == c);
    }
  }
}

TEST_CASE("q_poly examples") {
  CHECK(q_poly(3, 2) == one(2));
  CHECK(q_poly(2, 2) == one(2) - x(2, 1) * x(2, 2));
  const auto block = [](int a, int b) { return MultiPoly::monomial_range(6, static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };
  CHECK(q_poly(3, 6) == one(6) - block(1, 3) - block(2, 4) - block(3, 5) - block(4, 6) + block(1, 6));
  CHECK(q_poly(2, 0) == MultiPoly::constant(0, 1));
  for (int k = 2; k <= 4; ++k) {
    for (int r = 0; r <= 10; ++r) REQUIRE(q_poly(k, r) == q_oracle(k, r));
  }
  CHECK(block_unions(2, 1, 4).size() == 5);
}

TEST_CASE("t_series examples") {
  for (int k = 2; k <= 4; ++k) {
    for (int r = 1; r < k; ++r) {
      const auto t = t_series(k, r, 6);
      CHECK(t.poly == x(static_cast<std::size_t>(r), 1));
    }
  }
  CHECK(t_series(2, 2, 3).coefficient({2, 1}) == 1);
  const auto t = t_series(3, 4, 7);
  CHECK(t.poly.total_degree() <= 7);
  CHECK(t.trunc == 7);
}

TEST_CASE("t_series coefficients equal type_count") {
  for (int k = 2; k <= 3; ++k) {
    const int r = 6;
    const int deg = 8;
    const auto t = t_series(k, r, deg);
    Exponents e(static_cast<std::size_t>(r), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int left) {
      if (pos == e.size()) {
        std::size_t len = e.size();
        while (len > 0 && e[len - 1] == 0) --len;
        if (len == 0 || e[0] == 0) return;
        REQUIRE(t.coefficient(e) == type_count(TypeVector(e.begin(), e.begin() + static_cast<long>(len)), k));
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[pos] = v;
        walk(pos + 1, left - v);
      }
      e[pos] = 0;
    };
    walk(0, deg);
  }
}

TEST_CASE("divide_series and geometric_series") {
  const auto num = x(1, 1);
  const auto den = one(1) - x(1, 1);
  const auto q = divide_series(num, den, 4);
  CHECK(q.poly.to_string() == "x1 + x1^2 + x1^3 + x1^4");
  CHECK(geometric_series(MultiPoly::constant(1, 2) * x(1, 1), 3).to_string() == "1 + 2*x1 + 4*x1^2 + 8*x1^3");
  CHECK_THROWS_AS(divide_series(num, x(1, 1), 3), InvalidInput);
}

TEST_CASE("continuant examples") {
  CHECK(continuant_ones(2, 5) == std::vector<BigInt>{1, 1, 2, 3, 5, 8});
  CHECK(continuant_ones(3, 8) == std::vector<BigInt>{1, 1, 1, 2, 3, 4, 6, 9, 13});
  CHECK(continuant_symbolic(2, 2) == x(2, 1) * x(2, 2) + one(2));
  CHECK(block_deletion_expansion(2, 3) == x(3, 1) * x(3, 2) * x(3, 3) + x(3, 3) + x(3, 1));
  CHECK(block_deletion_expansion(4, 3) == MultiPoly::monomial_range(3, 1, 3));
  const std::vector<BigInt> ones(5, BigInt(1));
  CHECK(continuant_matrix<BigInt>(2, ones, BigInt(1), BigInt(0))[0] == 8);
  CHECK(continuant_matrix<BigInt>(3, std::vector<BigInt>{}, BigInt(1), BigInt(0)) == std::vector<BigInt>{1, 0, 0});
  CHECK(continuant<BigInt>(3, ones, BigInt(1)) == 4);
  CHECK_THROWS_AS(continuant_ones(1, 3), InvalidInput);
}

TEST_CASE("continuant forms agree symbolically") {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; n <= 10; ++n) {
      const auto rec = continuant_symbolic(k, n);
      REQUIRE(rec == continuant_matrix_symbolic(k, n));
      REQUIRE(rec == block_deletion_expansion(k, n));
    }
  }
  CHECK(continuant_matrix_symbolic(3, 4) == continuant_symbolic(3, 4));
}

TEST_CASE("continuant ones recurrence") {
  for (int k = 2; k <= 5; ++k) {
    const auto a = continuant_ones(k, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
      BigInt want = a[n - 1];
      if (n >= static_cast<std::size_t>(k)) want += a[n - static_cast<std::size_t>(k)];
      REQUIRE(a[n] == want);
    }
  }
}

TEST_CASE("q_poly against the continuant at a root of unity") {
  CHECK(q_vs_continuant_check(2, 3, {{Rational(1), Rational(1), Rational(1)}}));
  CHECK(q_vs_continuant_check(3, 6, {std::vector<Rational>(6, Rational(1, 2))}));
  CHECK(q_vs_continuant_check(2, 1, {{Rational(5, 3)}}));
  for (int k = 2; k <= 4; ++k) {
    for (int r = 1; r <= 8; ++r) {
      CHECK(q_vs_continuant_check(k, r, sample_positive_rationals(r, 20, static_cast<unsigned>(k * 100 + r))));
    }
  }
  CHECK(q_continuant_deviation(2, 2, {{Rational(1), Rational(1)}}) < 1e-12);
}

TEST_CASE("sample points are deterministic") {
  const auto a = sample_positive_rationals(3, 4, 7);
  CHECK(a == sample_positive_rationals(3, 4, 7));
  for (const auto& p : a) {
    CHECK(p.size() == 3);
    for (const auto& v : p) CHECK(v > 0);
  }
}

TEST_CASE("continued fraction expansion") {
  CHECK(continued_fraction_t2(1, 5).poly == x(1, 1));
  const auto two = continued_fraction_t2(2, 5);
  MultiPoly expected(2);
  expected.add_term({1, 0}, 1);
  expected.add_term({2, 1}, 1);
  expected.add_term({3, 2}, 1);
  CHECK(two.poly == expected);
  for (int r = 1; r <= 5; ++r) {
    for (int d = 0; d <= 8; ++d) REQUIRE(continued_fraction_t2(r, d) == t_series(2, r, d));
  }
}

TEST_CASE("Flajolet expansion") {
  CHECK(flajolet_series(1).poly == x(1, 1));
  CHECK(flajolet_series(3).poly.to_string() == "x1 + x1^2*x2");
  const auto five = flajolet_series(5);
  CHECK(five.coefficient({3, 2, 0, 0, 0}) == 1);
  CHECK(five.coefficient({2, 2, 1, 0, 0}) == 1);
  for (int d = 1; d <= 8; ++d) REQUIRE(flajolet_series(d) == t_series(2, d, d));
}

TEST_CASE("YPoly and power series") {
  const YPoly y = YPoly::y();
  CHECK((y * y * y * y * y + YPoly(4L) * y * y * y + YPoly(6L) * y * y + YPoly(13L) * y + YPoly(18L)).to_string() ==
        "y^5 + 4y^3 + 6y^2 + 13y + 18");
  CHECK((y - YPoly(1L)).to_string() == "y - 1");
  CHECK(YPoly(0L).to_string() == "0");
  CHECK((y * y - y).evaluate(BigInt(3)) == 6);
  const UniSeries c(std::vector<BigInt>{0, 1, 0, 0});
  CHECK(UniSeries::geometric(c) == UniSeries(std::vector<BigInt>{1, 1, 1, 1}));
  CHECK_THROWS_AS(UniSeries::geometric(UniSeries(std::vector<BigInt>{1, 1})), InvalidInput);
  CHECK(evaluate_y(lift_to_y(c), BigInt(7)) == c);
}
