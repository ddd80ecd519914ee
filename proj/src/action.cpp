#include "cslab/action.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "cslab/fstree.hpp"

namespace cslab {

PermClass PermClass::all() {
  return {"all", [](std::span<const int>) { return true; }};
}

PermClass PermClass::short_csp() {
  return {"short-csp", [](std::span<const int> w) {
            return w.empty() || is_levelwise_numbered(build_fs_tree(w));
          }};
}

PermClass PermClass::short_k_csp(int k) {
  if (k < 2) throw InvalidInput("short-k-csp needs k >= 2");
  return {"short-" + std::to_string(k) + "-csp", [k](std::span<const int> w) {
            if (w.empty()) return true;
            const auto tree = build_fs_tree(w);
            return k_condition(tree, k) && is_levelwise_numbered(tree);
          }};
}

PermClass PermClass::by_name(const std::string& name, int k) {
  if (name == "all") return all();
  if (name == "short-csp") return short_csp();
  if (name == "short-k-csp") return short_k_csp(k);
  throw InvalidInput("unknown permutation class '" + name + "'");
}

std::optional<Decomposition> x_decompose(std::span<const int> w, int x) {
  const auto at = std::find(w.begin(), w.end(), x);
  if (at == w.end()) throw InvalidInput("letter " + std::to_string(x) + " does not occur in the word");
  std::size_t lo = w.size();
  std::size_t hi = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= x) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
      ++count;
    }
  }
  if (hi - lo + 1 != count) return std::nullopt;
  const auto pos = static_cast<std::size_t>(at - w.begin());
  if (pos != lo && pos != hi) return std::nullopt;
  return Decomposition{{w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo)},
                       {w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi) + 1},
                       {w.begin() + static_cast<std::ptrdiff_t>(hi) + 1, w.end()}};
}

std::vector<int> flip(std::span<const int> w, int x) {
  std::vector<int> out(w.begin(), w.end());
  const auto d = x_decompose(w, x);
  if (!d || d->w2.size() < 2) return out;
  const std::size_t lo = d->w1.size();
  const std::size_t hi = lo + d->w2.size() - 1;
  if (out[lo] == x) {
    std::rotate(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(lo) + 1,
                out.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  } else {
    std::rotate(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi),
                out.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  }
  return out;
}

Permutation flip(const Permutation& w, int x) { return Permutation(flip(w.values(), x)); }

std::vector<int> flip_set(std::span<const int> w) {
  // pos[v] = position of letter v; letters >= i occupy a window iff
  // max - min + 1 = n - i + 1, maintained while i decreases.
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
  std::vector<int> out;
  if (n == 0) return out;
  int lo = pos[static_cast<std::size_t>(n)];
  int hi = lo;
  for (int x = n - 1; x >= 1; --x) {
    const int p = pos[static_cast<std::size_t>(x)];
    lo = std::min(lo, p);
    hi = std::max(hi, p);
    if (hi - lo == n - x && (p == lo || p == hi)) out.push_back(x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_distinguished(std::span<const int> w) {
  std::vector<int> pos(w.size() + 2);
  for (std::size_t i = 0; i < w.size(); ++i) pos[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
  for (int i : flip_set(w)) {
    if (pos[static_cast<std::size_t>(i) + 1] < pos[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

std::vector<Permutation> orbit_members(const Permutation& rep) {
  std::vector<Permutation> out{rep};
  for (int i : flip_set(rep.values())) {
    const std::size_t half = out.size();
    for (std::size_t j = 0; j < half; ++j) out.push_back(flip(out[j], i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlipClosureError::FlipClosureError(Permutation member_, int x_, Permutation image_, const std::string& class_name)
    : InvalidInput("class '" + class_name + "' is not closed under flips: " + member_.to_string() + " is a member but its " +
                   std::to_string(x_) + "-flip " + image_.to_string() + " is not"),
      member(std::move(member_)),
      x(x_),
      image(std::move(image_)) {}

unsigned worker_threads() {
  if (const char* env = std::getenv("CS_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void visit_class_members(const PermClass& cls, int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n == 0) {
    if (cls.contains(std::span<const int>{})) visit(Permutation{});
    return;
  }
  // Shard s holds the members whose first letter is s+1.
  std::vector<std::vector<Permutation>> shards(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int s = next++; s < n; s = next++) {
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v) {
        if (v != s + 1) rest.push_back(v);
      }
      std::vector<int> w(static_cast<std::size_t>(n));
      w[0] = s + 1;
      do {
        std::copy(rest.begin(), rest.end(), w.begin() + 1);
        if (cls.contains(w)) shards[static_cast<std::size_t>(s)].emplace_back(w);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  };
  const unsigned threads = std::min<unsigned>(worker_threads(), static_cast<unsigned>(n));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& shard : shards) {
    for (const auto& p : shard) visit(p);
  }
}

namespace {

void check_closure(const PermClass& cls, const Permutation& w, std::span<const int> fs) {
  for (int i : fs) {
    auto image = flip(w.values(), i);
    if (!cls.contains(image)) throw FlipClosureError(w, i, Permutation(std::move(image)), cls.name);
  }
}

BigInt pow2(std::size_t j) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, j);
  return out;
}

}  // namespace

std::vector<OrbitRecord> orbits(const PermClass& cls, int n, bool with_members) {
  std::vector<OrbitRecord> out;
  visit_class_members(cls, n, [&](const Permutation& w) {
    const auto fs = flip_set(w.values());
    check_closure(cls, w, fs);
    if (!is_distinguished(w.values())) return;
    OrbitRecord rec{w, fs, pow2(fs.size()), {}};
    if (with_members) rec.members = orbit_members(w);
    out.push_back(std::move(rec));
  });
  return out;
}

OrbitCounts count_orbits(const PermClass& cls, int max_n) {
  if (max_n < 0) throw InvalidInput("max_n must be non-negative");
  const auto size = static_cast<std::size_t>(max_n) + 1;
  OrbitCounts c{std::vector<BigInt>(size, BigInt(0)), std::vector<BigInt>(size, BigInt(0)),
                std::vector<std::vector<BigInt>>(size), std::vector<std::vector<BigInt>>(size)};
  for (int n = 1; n <= max_n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    c.members_by_size[un].assign(un, BigInt(0));
    c.orbits_by_size[un].assign(un, BigInt(0));
    visit_class_members(cls, n, [&](const Permutation& w) {
      const auto fs = flip_set(w.values());
      check_closure(cls, w, fs);
      c.members[un] += 1;
      c.members_by_size[un][fs.size()] += 1;
      if (is_distinguished(w.values())) {
        c.orbit_count[un] += 1;
        c.orbits_by_size[un][fs.size()] += 1;
      }
    });
    for (std::size_t j = 0; j < un; ++j) {
      if (c.orbits_by_size[un][j] * pow2(j) != c.members_by_size[un][j]) {
        throw std::logic_error("orbit sizes disagree with flip sets at n = " + std::to_string(n));
      }
    }
  }
  return c;
}

UniSeries orbit_gf_from_members(const UniSeries& P) {
  return P * UniSeries::geometric(BigInt(-1) * P);
}

BiSeries refined_member_gf(const UniSeries& P) {
  const BiSeries lifted = lift_to_y(P);
  const YPoly factor = YPoly(2) * (YPoly::y() - YPoly(1));
  return lifted * BiSeries::geometric(factor * lifted);
}

BiSeries refined_orbit_gf(const UniSeries& P) {
  const BiSeries lifted = lift_to_y(P);
  const YPoly factor = YPoly::y() - YPoly(2);
  return lifted * BiSeries::geometric(factor * lifted);
}

OrbitSeries orbit_series(const PermClass& cls, int max_n) {
  const auto counts = count_orbits(cls, max_n);
  OrbitSeries s;
  s.P = UniSeries(counts.members);
  s.O = UniSeries(counts.orbit_count);
  std::vector<YPoly> pxy(counts.members.size());
  std::vector<YPoly> oxy(counts.members.size());
  for (std::size_t n = 1; n < counts.members.size(); ++n) {
    pxy[n] = YPoly::from_coefficients(counts.members_by_size[n]);
    oxy[n] = YPoly::from_coefficients(counts.orbits_by_size[n]);
  }
  s.Pxy = BiSeries(std::move(pxy));
  s.Oxy = BiSeries(std::move(oxy));
  s.O_closed = orbit_gf_from_members(s.P);
  s.Pxy_closed = refined_member_gf(s.P);
  s.Oxy_closed = refined_orbit_gf(s.P);
  return s;
}

CompatibilityReport check_compatible(const PermClass& cls, int max_n) {
  CompatibilityReport report;
  for (int n = 1; n <= max_n && report.ok; ++n) {
    visit_class_members(cls, n, [&](const Permutation& w) {
      if (!report.ok) return;
      for (int x = 1; x <= n && report.ok; ++x) {
        const auto d = x_decompose(w.values(), x);
        if (!d) continue;
        const auto image = flip(w.values(), x);
        if (!cls.contains(image)) {
          report = {false, w.to_string() + ": " + std::to_string(x) + "-flip " + join_ints(image) + " leaves the class"};
          return;
        }
        const auto middle = pattern(d->w2);
        if (!cls.contains(middle.values())) {
          report = {false, w.to_string() + ": middle part " + join_ints(d->w2) + " for x = " + std::to_string(x) +
                               " has pattern " + middle.to_string() + " outside the class"};
          return;
        }
        std::vector<int> outer = d->w1;
        outer.insert(outer.end(), d->w3.begin(), d->w3.end());
        if (outer.empty()) continue;
        const auto outer_pattern = pattern(outer);
        if (!cls.contains(outer_pattern.values())) {
          report = {false, w.to_string() + ": outer part " + join_ints(outer) + " for x = " + std::to_string(x) +
                               " has pattern " + outer_pattern.to_string() + " outside the class"};
          return;
        }
      }
    });
  }
  return report;
}

}  // namespace cslab
