#include "cslab/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace cslab {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const BigInt& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  return monomial_range(nvars, index, index);
}

MultiPoly MultiPoly::monomial_range(std::size_t nvars, std::size_t first, std::size_t last) {
  if (first < 1 || last > nvars) throw InvalidInput("variable index out of range");
  Exponents e(nvars, 0);
  for (std::size_t i = first; i <= last; ++i) e[i - 1] = 1;
  MultiPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != nvars_) throw InvalidInput("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

MultiPoly MultiPoly::homogeneous(int d) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

MultiPoly MultiPoly::truncated(int max_degree) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) > max_degree) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw InvalidInput("polynomials live in different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::multiply_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree) {
  a.check_same(b);
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = std::accumulate(ea.begin(), ea.end(), 0);
    if (da > max_degree) break;
    for (const auto& [eb, cb] : b.terms_) {
      const int db = std::accumulate(eb.begin(), eb.end(), 0);
      if (da + db > max_degree) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::multiply_truncated(a, b, std::numeric_limits<int>::max() / 2);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mag.get_str() << "*" << mono;
    }
  }
  return out.str();
}

TruncatedMultiSeries divide_series(const MultiPoly& num, const MultiPoly& den, int trunc) {
  if (den.coefficient(Exponents(den.nvars(), 0)) != 1) {
    throw InvalidInput("series division needs a denominator with constant term 1");
  }
  std::vector<MultiPoly> den_parts;
  for (int d = 0; d <= trunc; ++d) den_parts.push_back(den.homogeneous(d));

  // f_d = num_d - sum_{e >= 1} den_e f_{d-e}
  std::vector<MultiPoly> parts;
  MultiPoly out(num.nvars());
  for (int d = 0; d <= trunc; ++d) {
    MultiPoly fd = num.homogeneous(d);
    for (int e = 1; e <= d; ++e) {
      if (den_parts[static_cast<std::size_t>(e)].is_zero()) continue;
      fd -= den_parts[static_cast<std::size_t>(e)] * parts[static_cast<std::size_t>(d - e)];
    }
    out += fd;
    parts.push_back(std::move(fd));
  }
  return {std::move(out), trunc};
}

MultiPoly geometric_series(const MultiPoly& h, int trunc) {
  if (h.coefficient(Exponents(h.nvars(), 0)) != 0) {
    throw InvalidInput("geometric series needs a zero constant term");
  }
  MultiPoly sum = MultiPoly::constant(h.nvars(), 1);
  MultiPoly power = sum;
  for (;;) {
    power = MultiPoly::multiply_truncated(power, h, trunc);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

BigInt type_count(const TypeVector& type, int k) {
  if (k < 2) throw InvalidInput("type_count needs k >= 2");
  TypeVector t = type;
  BigInt product = 1;
  for (;;) {
    while (!t.empty() && t.back() == 0) t.pop_back();
    if (t.empty() || t.front() < 1) return 0;
    if (std::any_of(t.begin(), t.end(), [](int v) { return v < 0; })) return 0;
    const int r = static_cast<int>(t.size());
    if (r == 1) return t[0] == 1 ? product : BigInt(0);
    const int top = t.back();
    // Levels at or below zero count as empty.
    for (int j = r - k + 1; j <= r - 1; ++j) {
      const int value = j >= 1 ? t[static_cast<std::size_t>(j - 1)] : 0;
      if (value < top) return 0;
    }
    product *= binomial(t[static_cast<std::size_t>(r - k)] - 1, top);
    if (product == 0) return 0;
    for (int j = r - k + 1; j <= r; ++j) t[static_cast<std::size_t>(j - 1)] -= top;
  }
}

std::vector<std::vector<int>> block_unions(int k, int first, int last) {
  if (k < 1) throw InvalidInput("block length must be positive");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto walk = [&](auto&& self, int pos) -> void {
    if (pos > last) {
      out.push_back(current);
      return;
    }
    self(self, pos + 1);
    if (pos + k - 1 <= last) {
      for (int i = 0; i < k; ++i) current.push_back(pos + i);
      self(self, pos + k);
      current.resize(current.size() - static_cast<std::size_t>(k));
    }
  };
  walk(walk, first);
  return out;
}

MultiPoly q_poly_range(int k, std::size_t nvars, int first, int last) {
  if (k < 2) throw InvalidInput("q_poly needs k >= 2");
  if (last > static_cast<int>(nvars) || (first < 1 && first <= last)) {
    throw InvalidInput("q_poly variable range out of bounds");
  }
  MultiPoly out(nvars);
  for (const auto& s : block_unions(k, first, last)) {
    Exponents e(nvars, 0);
    for (int i : s) e[static_cast<std::size_t>(i - 1)] = 1;
    const bool odd = (s.size() / static_cast<std::size_t>(k)) % 2 == 1;
    out.add_term(e, odd ? -1 : 1);
  }
  return out;
}

MultiPoly q_poly(int k, int r) { return q_poly_range(k, static_cast<std::size_t>(r), 1, r); }

TruncatedMultiSeries t_series(int k, int r, int trunc) {
  if (k < 2 || r < 1 || trunc < 0) throw InvalidInput("t_series needs k >= 2, r >= 1, trunc >= 0");
  const auto nv = static_cast<std::size_t>(r);
  const MultiPoly num = MultiPoly::variable(nv, 1) * q_poly_range(k, nv, 2, r);
  return divide_series(num, q_poly(k, r), trunc);
}

TruncatedMultiSeries continued_fraction_t2(int r, int trunc) {
  if (r < 1 || trunc < 0) throw InvalidInput("continued_fraction_t2 needs r >= 1, trunc >= 0");
  const auto nv = static_cast<std::size_t>(r);
  // g_r = x_r; g_j = 1/(1/x_j - g_{j+1}) = x_j / (1 - x_j g_{j+1}).
  MultiPoly g = MultiPoly::variable(nv, nv).truncated(trunc);
  for (std::size_t j = nv - 1; j >= 1; --j) {
    const MultiPoly xj = MultiPoly::variable(nv, j);
    const MultiPoly inner = MultiPoly::multiply_truncated(xj, g, trunc);
    g = MultiPoly::multiply_truncated(xj, geometric_series(inner, trunc), trunc);
  }
  return {std::move(g), trunc};
}

TruncatedMultiSeries flajolet_series(int trunc) {
  if (trunc < 0) throw InvalidInput("flajolet_series needs trunc >= 0");
  const auto nv = static_cast<std::size_t>(std::max(trunc, 1));
  // h_j = 1 / (1 - x_j x_{j+1} h_{j+1}); the omitted tail starts at degree > trunc.
  MultiPoly h = MultiPoly::constant(nv, 1);
  for (std::size_t j = nv - 1; j >= 1; --j) {
    const MultiPoly pair = MultiPoly::monomial_range(nv, j, j + 1);
    h = geometric_series(MultiPoly::multiply_truncated(pair, h, trunc), trunc);
  }
  return {MultiPoly::multiply_truncated(MultiPoly::variable(nv, 1), h, trunc), trunc};
}

namespace {

std::vector<MultiPoly> symbolic_variables(int n) {
  std::vector<MultiPoly> x;
  for (int i = 1; i <= n; ++i) {
    x.push_back(MultiPoly::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  }
  return x;
}

}  // namespace

MultiPoly continuant_symbolic(int k, int n) {
  const auto x = symbolic_variables(n);
  return continuant<MultiPoly>(k, x, MultiPoly::constant(static_cast<std::size_t>(n), 1));
}

MultiPoly continuant_matrix_symbolic(int k, int n) {
  const auto x = symbolic_variables(n);
  const auto nv = static_cast<std::size_t>(n);
  return continuant_matrix<MultiPoly>(k, x, MultiPoly::constant(nv, 1), MultiPoly(nv)).front();
}

MultiPoly block_deletion_expansion(int k, int n) {
  if (k < 2) throw InvalidInput("block_deletion_expansion needs k >= 2");
  const auto nv = static_cast<std::size_t>(n);
  MultiPoly out(nv);
  for (const auto& deleted : block_unions(k, 1, n)) {
    Exponents e(nv, 1);
    for (int i : deleted) e[static_cast<std::size_t>(i - 1)] = 0;
    out.add_term(e, 1);
  }
  return out;
}

std::vector<BigInt> continuant_ones(int k, int max_n) {
  const std::vector<BigInt> ones(static_cast<std::size_t>(std::max(max_n, 0)), BigInt(1));
  return continuant_sequence<BigInt>(k, ones, BigInt(1));
}

double q_continuant_deviation(int k, int r, const std::vector<std::vector<Rational>>& points) {
  using C = std::complex<double>;
  const MultiPoly q = q_poly(k, r);
  const C zeta = std::polar(1.0, std::numbers::pi / k);
  double worst = 0.0;
  for (const auto& point : points) {
    if (point.size() != static_cast<std::size_t>(r)) throw InvalidInput("sample point has the wrong dimension");
    std::vector<C> x;
    for (const auto& v : point) {
      if (v <= 0) throw InvalidInput("sample points must be positive");
      x.emplace_back(v.get_d(), 0.0);
    }
    const C lhs = q.evaluate<C>(x, C(1.0), [](const BigInt& c) { return C(c.get_d(), 0.0); });
    std::vector<C> inv;
    C prefactor = std::pow(zeta, r);
    for (const auto& xi : x) {
      inv.push_back(1.0 / (zeta * xi));
      prefactor *= xi;
    }
    const C rhs = prefactor * continuant<C>(k, inv, C(1.0));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

bool q_vs_continuant_check(int k, int r, const std::vector<std::vector<Rational>>& points,
                           double tolerance) {
  return q_continuant_deviation(k, r, points) <= tolerance;
}

std::vector<std::vector<Rational>> sample_positive_rationals(int r, int count, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> pick(1, 16);
  std::vector<std::vector<Rational>> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> point;
    for (int j = 0; j < r; ++j) {
      const long num = pick(gen);
      const long den = pick(gen);
      Rational q{BigInt(num), BigInt(den)};
      q.canonicalize();
      point.push_back(q);
    }
    out.push_back(std::move(point));
  }
  return out;
}

YPoly::YPoly(long c) : c_{BigInt(c)} { trim(); }
YPoly::YPoly(BigInt c) : c_{std::move(c)} { trim(); }

YPoly YPoly::from_coefficients(std::vector<BigInt> c) {
  YPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

YPoly YPoly::y() { return from_coefficients({BigInt(0), BigInt(1)}); }

void YPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt YPoly::evaluate(const BigInt& y) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

YPoly operator+(const YPoly& a, const YPoly& b) {
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return YPoly::from_coefficients(std::move(c));
}

YPoly YPoly::operator-() const {
  YPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

YPoly operator-(const YPoly& a, const YPoly& b) { return a + (-b); }

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return YPoly::from_coefficients(std::move(c));
}

std::string YPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = c_.size(); d-- > 0;) {
    const BigInt& c = c_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) out << mag.get_str();
    if (d >= 1) out << "y";
    if (d >= 2) out << "^" << d;
  }
  return out.str();
}

BiSeries lift_to_y(const UniSeries& s) {
  std::vector<YPoly> c;
  for (const auto& v : s.coefficients()) c.emplace_back(v);
  return BiSeries(std::move(c));
}

UniSeries evaluate_y(const BiSeries& s, const BigInt& y) {
  std::vector<BigInt> c;
  for (const auto& v : s.coefficients()) c.push_back(v.evaluate(y));
  return UniSeries(std::move(c));
}

}  // namespace cslab
