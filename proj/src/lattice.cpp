#include "cslab/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace cslab {

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::Catalan: return "catalan";
    case PathKind::Augmented: return "augmented";
    case PathKind::Bridge: return "bridge";
  }
  return "?";
}

PathKind parse_path_kind(std::string_view text) {
  if (text == "catalan") return PathKind::Catalan;
  if (text == "augmented") return PathKind::Augmented;
  if (text == "bridge") return PathKind::Bridge;
  throw InvalidInput("unknown path kind '" + std::string(text) + "'");
}

LatticePath LatticePath::parse(std::string_view steps, int k, PathKind kind) {
  if (k < 2) throw InvalidInput("k must be at least 2");
  LatticePath path{k, kind, {}};
  path.steps.reserve(steps.size());
  for (char c : steps) {
    if (c == 'U' || c == 'u') {
      path.steps.push_back(Step::Up);
    } else if (c == 'D' || c == 'd') {
      path.steps.push_back(Step::Down);
    } else {
      throw InvalidInput(std::string("bad step character '") + c + "' (expected U or D)");
    }
  }
  return path;
}

std::string LatticePath::step_string() const {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

int LatticePath::up_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::Up));
}

int LatticePath::down_count() const { return static_cast<int>(steps.size()) - up_count(); }

std::vector<long> LatticePath::heights() const {
  std::vector<long> out;
  out.reserve(steps.size());
  long h = 0;
  for (Step s : steps) {
    h += s == Step::Up ? 1 : 1 - k;
    out.push_back(h);
  }
  return out;
}

BigInt fuss_catalan(long n, long k) {
  if (n < 0 || k < 2) throw InvalidInput("fuss_catalan needs n >= 0 and k >= 2");
  BigInt num = binomial(k * n + 1, n);
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k * n + 1));
  return out;
}

bool validate(const LatticePath& path) {
  if (path.k < 2) return false;
  const int ups = path.up_count();
  const int downs = path.down_count();
  const auto h = path.heights();
  switch (path.kind) {
    case PathKind::Catalan:
      if (ups != (path.k - 1) * downs) return false;
      return std::all_of(h.begin(), h.end(), [](long y) { return y >= 0; });
    case PathKind::Augmented:
      if (path.steps.empty() || path.steps.front() != Step::Up) return false;
      if (ups != (path.k - 1) * downs + 1) return false;
      return std::all_of(h.begin(), h.end(), [](long y) { return y >= 1; });
    case PathKind::Bridge:
      return ups == (path.k - 1) * downs;
  }
  return false;
}

namespace {

// Depth-first with Up tried before Down gives lexicographic order.
struct PathWalker {
  int k;
  int ups_total;
  int downs_total;
  bool nonnegative;
  LatticePath path;
  const std::function<void(const LatticePath&)>& visit;

  void run(int ups, int downs, long height) {
    if (ups == ups_total && downs == downs_total) {
      visit(path);
      return;
    }
    if (ups < ups_total) {
      path.steps.push_back(Step::Up);
      run(ups + 1, downs, height + 1);
      path.steps.pop_back();
    }
    if (downs < downs_total && (!nonnegative || height - (k - 1) >= 0)) {
      path.steps.push_back(Step::Down);
      run(ups, downs + 1, height - (k - 1));
      path.steps.pop_back();
    }
  }
};

void check_order(int n, int k) {
  if (n < 0 || k < 2) throw InvalidInput("enumeration needs n >= 0 and k >= 2");
}

}  // namespace

void visit_catalan(int n, int k, const std::function<void(const LatticePath&)>& visit) {
  check_order(n, k);
  PathWalker walker{k, (k - 1) * n, n, true, LatticePath{k, PathKind::Catalan, {}}, visit};
  walker.path.steps.reserve(static_cast<std::size_t>(k * n));
  walker.run(0, 0, 0);
}

void visit_bridges(int n, int k, const std::function<void(const LatticePath&)>& visit) {
  check_order(n, k);
  PathWalker walker{k, (k - 1) * n, n, false, LatticePath{k, PathKind::Bridge, {}}, visit};
  walker.path.steps.reserve(static_cast<std::size_t>(k * n));
  walker.run(0, 0, 0);
}

std::vector<LatticePath> enumerate_catalan(int n, int k) {
  std::vector<LatticePath> out;
  visit_catalan(n, k, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

std::vector<LatticePath> enumerate_bridges(int n, int k) {
  std::vector<LatticePath> out;
  visit_bridges(n, k, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

LatticePath augment(const LatticePath& path) {
  if (path.kind != PathKind::Catalan || !validate(path)) {
    throw InvalidInput("augment expects a valid catalan path, got '" + path.step_string() + "'");
  }
  LatticePath out{path.k, PathKind::Augmented, {}};
  out.steps.reserve(path.steps.size() + 1);
  out.steps.push_back(Step::Up);
  out.steps.insert(out.steps.end(), path.steps.begin(), path.steps.end());
  return out;
}

LatticePath deaugment(const LatticePath& path) {
  if (path.kind != PathKind::Augmented || !validate(path)) {
    throw InvalidInput("deaugment expects a valid augmented path, got '" + path.step_string() + "'");
  }
  return LatticePath{path.k, PathKind::Catalan, {path.steps.begin() + 1, path.steps.end()}};
}

int steps_above_axis(const LatticePath& bridge) {
  if (bridge.k != 2) throw InvalidInput("steps_above_axis is defined for k = 2 only");
  if (bridge.kind != PathKind::Bridge || !validate(bridge)) {
    throw InvalidInput("steps_above_axis expects a bridge");
  }
  int count = 0;
  long start = 0;
  for (long end : bridge.heights()) {
    if (start + end > 0) ++count;
    start = end;
  }
  return count;
}

int up_steps_below_axis(const LatticePath& bridge) {
  if (bridge.kind != PathKind::Bridge || !validate(bridge)) {
    throw InvalidInput("up_steps_below_axis expects a bridge");
  }
  int count = 0;
  long h = 0;
  for (Step s : bridge.steps) {
    if (s == Step::Up) {
      if (h < 0) ++count;
      h += 1;
    } else {
      h -= bridge.k - 1;
    }
  }
  return count;
}

int huq_statistic(std::span<const std::int64_t> v, std::size_t shift) {
  const std::size_t m = v.size();
  if (m == 0) throw InvalidInput("huq_statistic needs a non-empty vector");
  if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) != 1) {
    throw InvalidInput("huq_statistic needs entries summing to 1");
  }
  if (shift >= m) throw InvalidInput("shift out of range");
  int positive = 0;
  std::int64_t partial = 0;
  for (std::size_t len = 1; len < m; ++len) {
    partial += v[(shift + len - 1) % m];
    if (partial > 0) ++positive;
  }
  return positive;
}

std::vector<int> huq_profile(std::span<const std::int64_t> v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t s = 0; s < v.size(); ++s) out.push_back(huq_statistic(v, s));
  return out;
}

VanishingWindow::VanishingWindow(std::size_t start_, std::size_t length_)
    : InvalidInput("cyclic window starting at index " + std::to_string(start_) + " of length " +
                   std::to_string(length_) + " sums to zero"),
      start(start_),
      length(length_) {}

std::vector<int> spitzer_profile(std::span<const Rational> x) {
  const std::size_t m = x.size();
  if (m == 0) throw InvalidInput("spitzer_profile needs a non-empty vector");
  Rational total = 0;
  for (const auto& q : x) total += q;
  if (total != 0) throw InvalidInput("spitzer_profile needs entries summing to 0");

  std::vector<int> out(m, 0);
  for (std::size_t s = 0; s < m; ++s) {
    Rational partial = 0;
    for (std::size_t len = 1; len <= m; ++len) {
      partial += x[(s + len - 1) % m];
      if (len < m && partial == 0) throw VanishingWindow(s, len);
      if (partial > 0) ++out[s];
    }
  }
  return out;
}

std::vector<Rational> spitzer_shift(std::span<const std::int64_t> y) {
  std::vector<Rational> out;
  out.reserve(y.size());
  const Rational step(1, static_cast<unsigned long>(y.size()));
  for (auto v : y) out.push_back(Rational(static_cast<long>(v)) - step);
  return out;
}

std::vector<LatticePoint> functional_order(std::span<const std::int64_t> v) {
  const long m = static_cast<long>(v.size());
  std::vector<LatticePoint> points;
  points.reserve(v.size());
  long height = 0;
  for (long i = 0; i < m; ++i) {
    points.push_back({i, height});
    height += v[static_cast<std::size_t>(i)];
  }
  // F(u,w) = w - u/m, compared as m*w - u to stay in integers.
  std::sort(points.begin(), points.end(), [m](const LatticePoint& a, const LatticePoint& b) {
    return m * a.w - a.u < m * b.w - b.u;
  });
  return points;
}

}  // namespace cslab
