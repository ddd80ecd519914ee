#include "cslab/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cslab/action.hpp"
#include "cslab/fstree.hpp"
#include "cslab/lattice.hpp"
#include "cslab/series.hpp"
#include "cslab/spitzer.hpp"

namespace cslab::verify {

namespace {

using Echo = std::function<void(const std::string&)>;

class Context {
 public:
  Context(const Report& report, const Echo& echo) : report_(report), echo_(echo) {}

  void check(const std::string& name, bool pass, const std::string& detail) {
    ok_ = ok_ && pass;
    report_(CaseResult{name, pass, detail});
  }
  void echo(const std::string& line) const { echo_(line); }
  bool ok() const { return ok_; }

 private:
  const Report& report_;
  const Echo& echo_;
  bool ok_ = true;
};

std::string tag(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

template <class F>
void for_each_permutation(int n, F f) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(std::span<const int>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

bool fits(int k, int n, int max) { return (k - 1) * n <= max; }

void raney(Context& ctx, int max) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; fits(k, n, max); ++n) {
      BigInt count = 0;
      bool valid = true;
      visit_catalan(n, k, [&](const LatticePath& p) {
        count += 1;
        valid = valid && validate(p);
      });
      const BigInt expected = fuss_catalan(n, k);
      ctx.check("raney " + tag(k, n), valid && count == expected,
                "paths=" + count.get_str() + " expected=" + expected.get_str());
    }
  }
}

void chung_feller(Context& ctx, int max) {
  for (int n = 0; n <= max; ++n) {
    std::vector<BigInt> hist(static_cast<std::size_t>(2 * n) + 1, BigInt(0));
    visit_bridges(n, 2, [&](const LatticePath& b) { hist[static_cast<std::size_t>(steps_above_axis(b))] += 1; });
    const BigInt expected = fuss_catalan(n, 2);
    bool pass = true;
    std::string bad;
    for (std::size_t v = 0; v < hist.size(); ++v) {
      const BigInt want = v % 2 == 0 ? expected : BigInt(0);
      if (hist[v] != want) {
        pass = false;
        bad = " class " + std::to_string(v) + " has " + hist[v].get_str();
      }
    }
    ctx.check("chung-feller " + tag(2, n), pass, "each even class has " + expected.get_str() + bad);
  }
}

void huq(Context& ctx, int max) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; fits(k, n, max); ++n) {
      std::vector<BigInt> hist(static_cast<std::size_t>((k - 1) * n) + 1, BigInt(0));
      visit_bridges(n, k, [&](const LatticePath& b) { hist[static_cast<std::size_t>(up_steps_below_axis(b))] += 1; });
      const BigInt expected = fuss_catalan(n, k);
      const bool pass = std::all_of(hist.begin(), hist.end(), [&](const BigInt& c) { return c == expected; });
      ctx.check("huq-bridges " + tag(k, n), pass, "each class has " + expected.get_str());
    }
  }
  const int max_len = std::min(max, 6);
  for (int m = 1; m <= max_len; ++m) {
    long vectors = 0;
    std::string failure;
    IntVector v(static_cast<std::size_t>(m), -3);
    while (failure.empty()) {
      if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) == 1) {
        ++vectors;
        auto profile = huq_profile(v);
        auto sorted = profile;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expected(static_cast<std::size_t>(m));
        std::iota(expected.begin(), expected.end(), 0);
        const auto x = spitzer_shift(v);
        const auto order = functional_order(v);
        bool strict = order.size() == static_cast<std::size_t>(m);
        for (std::size_t i = 1; strict && i < order.size(); ++i) {
          // F(u,w) = w - u/m compared as m*w - u.
          strict = m * order[i - 1].w - order[i - 1].u < m * order[i].w - order[i].u;
        }
        std::vector<int> spitzer;
        try {
          spitzer = spitzer_profile(x);
        } catch (const VanishingWindow&) {
          spitzer.clear();
        }
        std::vector<int> vi(v.begin(), v.end());
        if (sorted != expected) failure = "huq profile not a permutation at " + join_ints(vi);
        else if (spitzer != profile) failure = "spitzer profile differs at " + join_ints(vi);
        else if (!strict) failure = "functional order has ties at " + join_ints(vi);
      }
      std::size_t i = 0;
      while (i < v.size() && v[i] == 3) v[i++] = -3;
      if (i == v.size()) break;
      ++v[i];
    }
    ctx.check("huq-profile m=" + std::to_string(m), failure.empty(),
              failure.empty() ? std::to_string(vectors) + " vectors" : failure);
  }
}

void injectivity(Context& ctx, int max) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; fits(k, n, max); ++n) {
      std::set<Permutation> seen;
      std::string failure;
      visit_catalan(n, k, [&](const LatticePath& p) {
        if (!failure.empty()) return;
        const Permutation s = short_csp(p);
        if (!seen.insert(s).second) failure = "collision at " + s.to_string();
        else if (!(reconstruct(s, k) == p)) failure = "roundtrip fails for " + p.step_string();
        else if (!(short_csp_from_full(p) == s)) failure = "ascent pattern differs for " + p.step_string();
        else if (full_csp(augment(p)).vector().back() != 1) failure = "full CSP does not end in 1";
        else {
          const auto lv = levels(build_fs_tree(s.values()));
          const auto ul = up_step_levels(p);
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (lv.at(s[i]) != ul[i]) failure = "level mismatch for " + p.step_string();
          }
        }
      });
      ctx.check("injectivity " + tag(k, n), failure.empty(),
                failure.empty() ? std::to_string(seen.size()) + " distinct" : failure);
    }
  }
}

void fs_characterization(Context& ctx, int max) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 0; fits(k, n, max); ++n) {
      std::set<Permutation> image;
      visit_catalan(n, k, [&](const LatticePath& p) { image.insert(short_csp(p)); });
      std::set<Permutation> tree_side;
      if (n == 0) {
        tree_side.insert(Permutation());
      } else {
        for_each_permutation((k - 1) * n, [&](std::span<const int> w) {
          const auto t = build_fs_tree(w);
          if (is_levelwise_numbered(t) && k_condition(t, k)) {
            tree_side.insert(Permutation(std::vector<int>(w.begin(), w.end())));
          }
        });
      }
      const BigInt expected = fuss_catalan(n, k);
      ctx.check("fs-characterization " + tag(k, n), tree_side == image && expected == BigInt(tree_side.size()),
                std::to_string(tree_side.size()) + " levelwise, expected " + expected.get_str());
    }
  }
}

void type_oracle(Context& ctx, int max) {
  for (int k = 2; k <= 3; ++k) {
    std::map<TypeVector, BigInt> census;
    for (int n = 0; k * n + 1 <= max; ++n) {
      visit_catalan(n, k, [&](const LatticePath& p) { census[path_type(augment(p))] += 1; });
    }
    const int r = std::max(max - 1, 1);
    const auto series = t_series(k, r, max);
    std::string failure;
    long checked = 0;
    // Every composition-like vector of total at most max with a nonzero last entry.
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int left) {
      if (!failure.empty()) return;
      if (pos == e.size()) {
        std::size_t len = e.size();
        while (len > 0 && e[len - 1] == 0) --len;
        if (len == 0) return;
        const TypeVector type(e.begin(), e.begin() + static_cast<long>(len));
        const auto it = census.find(type);
        const BigInt paths = it == census.end() ? BigInt(0) : it->second;
        const BigInt formula = type_count(type, k);
        const BigInt coef = series.coefficient(e);
        ++checked;
        if (paths != formula || formula != coef) {
          std::vector<int> shown(type.begin(), type.end());
          failure = "type " + join_ints(shown) + ": census " + paths.get_str() + ", recursion " +
                    formula.get_str() + ", series " + coef.get_str();
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[pos] = v;
        walk(pos + 1, left - v);
      }
      e[pos] = 0;
    };
    walk(0, max);
    ctx.check("type-oracle k=" + std::to_string(k) + " points<=" + std::to_string(max), failure.empty(),
              failure.empty() ? std::to_string(checked) + " types, " + std::to_string(census.size()) + " realized"
                              : failure);
  }
}

void continuants(Context& ctx, int max) {
  for (int k = 2; k <= 4; ++k) {
    std::string failure;
    for (int n = 0; n <= max && failure.empty(); ++n) {
      const auto rec = continuant_symbolic(k, n);
      if (!(rec == continuant_matrix_symbolic(k, n))) failure = "matrix form differs at n=" + std::to_string(n);
      else if (!(rec == block_deletion_expansion(k, n))) failure = "block deletion differs at n=" + std::to_string(n);
    }
    ctx.check("continuant-forms k=" + std::to_string(k), failure.empty(), failure.empty() ? "symbolic match" : failure);
  }
  for (int k = 2; k <= 5; ++k) {
    const auto ones = continuant_ones(k, std::max(max, 30));
    bool pass = true;
    for (std::size_t n = 1; n < ones.size(); ++n) {
      BigInt want = ones[n - 1];
      if (n >= static_cast<std::size_t>(k)) want += ones[n - static_cast<std::size_t>(k)];
      pass = pass && ones[n] == want;
    }
    std::vector<int> head;
    for (std::size_t n = 0; n < std::min<std::size_t>(ones.size(), 10); ++n) head.push_back(static_cast<int>(ones[n].get_si()));
    ctx.check("continuant-ones k=" + std::to_string(k), pass, join_ints(head) + ",...");
  }
  for (int k = 2; k <= 4; ++k) {
    for (int r = 1; r <= std::min(max, 8); ++r) {
      const auto points = sample_positive_rationals(r, 20, static_cast<unsigned>(97 * k + r));
      const double dev = q_continuant_deviation(k, r, points);
      std::ostringstream detail;
      detail << "max deviation " << dev;
      ctx.check("q-continuant k=" + std::to_string(k) + " r=" + std::to_string(r), dev <= 1e-9, detail.str());
    }
  }
  const int depth = std::min(max, 8);
  for (int r = 1; r <= std::min(max, 5); ++r) {
    ctx.check("continued-fraction r=" + std::to_string(r),
              continued_fraction_t2(r, depth) == t_series(2, r, depth), "degree " + std::to_string(depth));
  }
  for (int d = 1; d <= depth; ++d) {
    ctx.check("flajolet D=" + std::to_string(d), flajolet_series(d) == t_series(2, d, d), "degree " + std::to_string(d));
  }
}

std::string oxy_table(const BiSeries& s) {
  std::ostringstream out;
  for (int n = 1; n <= s.trunc(); ++n) {
    out << "  x^" << n << ": " << s[static_cast<std::size_t>(n)].to_string() << '\n';
  }
  return out.str();
}

// O(x,y) expansions through x^6 as printed for the two built-in classes.
const std::vector<std::string>& expected_oxy(const std::string& cls) {
  static const std::vector<std::string> short_csp = {"1", "y", "y^2 + 1", "y^3 + 2y + 2", "y^4 + 3y^2 + 4y + 6",
                                                     "y^5 + 4y^3 + 6y^2 + 13y + 18"};
  static const std::vector<std::string> all = {"1", "y", "y^2 + 2", "y^3 + 4y + 8", "y^4 + 6y^2 + 16y + 48",
                                               "y^5 + 8y^3 + 24y^2 + 100y + 328"};
  return cls == "all" ? all : short_csp;
}

void orbit_genfun(Context& ctx, int max) {
  for (const std::string name : {"short-csp", "all"}) {
    const auto cls = PermClass::by_name(name);
    const auto s = orbit_series(cls, max);
    ctx.check("orbit-closed-forms " + name + " n<=" + std::to_string(max), s.agrees(),
              "O = P/(1+P), P(x,y), O(x,y)");

    // Ordered collections of orbits: O(x,3) = P/(1-P) with P the member series.
    const UniSeries o3 = evaluate_y(s.Oxy, BigInt(3));
    const UniSeries ordered = s.P * UniSeries::geometric(s.P);
    ctx.check("orbit-ordered " + name, o3 == ordered, "O(x,3) = P/(1-P)");

    const UniSeries from_orbits = s.O * UniSeries::geometric(s.O);
    ctx.check("orbit-inverse " + name, from_orbits == s.P, "P = O/(1-O)");

    const auto& want = expected_oxy(name);
    bool match = true;
    for (int n = 1; n <= std::min(max, 6); ++n) {
      match = match && s.Oxy[static_cast<std::size_t>(n)].to_string() == want[static_cast<std::size_t>(n) - 1];
    }
    ctx.check("orbit-expansion " + name, match, "O(x,y) through x^" + std::to_string(std::min(max, 6)));
    ctx.echo("O(x,y) for " + name + ":\n" + oxy_table(s.Oxy));

    if (name == "short-csp") {
      bool catalan = true;
      for (int n = 1; n <= max; ++n) catalan = catalan && s.O[static_cast<std::size_t>(n)] == fuss_catalan(n - 1, 2);
      ctx.check("orbit-catalan short-csp", catalan, "O_n = C_{n-1}");

      // 1 + O(x,y) = (1 - (y-2) x C(x)) / (1 - (y-1) x C(x)).
      const int deg = std::max(max, 1);
      std::vector<YPoly> xc(static_cast<std::size_t>(deg) + 1);
      for (int n = 1; n <= deg; ++n) xc[static_cast<std::size_t>(n)] = YPoly(fuss_catalan(n - 1, 2));
      const BiSeries xcx(xc);
      const YPoly y = YPoly::y();
      std::vector<YPoly> one_c(static_cast<std::size_t>(deg) + 1);
      one_c[0] = YPoly(1L);
      const BiSeries one(one_c);
      const BiSeries lhs = (one - (y - YPoly(2L)) * xcx) * BiSeries::geometric((y - YPoly(1L)) * xcx);
      BiSeries rhs = one;
      for (int n = 1; n <= std::min(deg, s.Oxy.trunc()); ++n) rhs[static_cast<std::size_t>(n)] = s.Oxy[static_cast<std::size_t>(n)];
      bool same = true;
      for (int n = 0; n <= std::min(deg, s.Oxy.trunc()); ++n) {
        same = same && lhs[static_cast<std::size_t>(n)] == rhs[static_cast<std::size_t>(n)];
      }
      ctx.check("orbit-catalan-closed short-csp", same, "1 + O(x,y) in terms of C(x)");
    }
  }
}

using SuiteFn = void (*)(Context&, int);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"raney", raney},
      {"chung-feller", chung_feller},
      {"huq", huq},
      {"injectivity", injectivity},
      {"fs-characterization", fs_characterization},
      {"type-oracle", type_oracle},
      {"continuant", continuants},
      {"orbit-genfun", orbit_genfun},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

bool run_suite(const std::string& suite, int max, const Report& report, const Echo& echo) {
  if (max < 0) throw InvalidInput("--max must be non-negative");
  Context ctx(report, echo);
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      found = true;
      fn(ctx, max);
    }
  }
  if (!found) throw InvalidInput("unknown suite '" + suite + "'");
  return ctx.ok();
}

}  // namespace cslab::verify
