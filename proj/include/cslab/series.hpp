#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cslab/common.hpp"
#include "cslab/spitzer.hpp"

namespace cslab {

using Exponents = std::vector<int>;

/// Graded order with x_1 < ... < x_r: total degree first, then the exponent of
/// x_r, then x_{r-1}, and so on.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Finitely supported polynomial in x_1..x_r with big-integer coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, BigInt, GradedLex>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const BigInt& c);
  /// x_{index}, 1-based.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  /// Product of x_first..x_last, 1-based and inclusive.
  static MultiPoly monomial_range(std::size_t nvars, std::size_t first, std::size_t last);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const BigInt& c);
  int total_degree() const;

  /// Terms of total degree exactly d.
  MultiPoly homogeneous(int d) const;
  MultiPoly truncated(int max_degree) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  /// Product keeping only total degree <= max_degree.
  static MultiPoly multiply_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree);

  template <class T, class FromInt>
  T evaluate(std::span<const T> point, const T& one, FromInt from_int) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const MultiPoly& o) const;

  std::size_t nvars_;
  Terms terms_;
};

template <class T, class FromInt>
T MultiPoly::evaluate(std::span<const T> point, const T& one, FromInt from_int) const {
  if (point.size() != nvars_) throw InvalidInput("evaluation point has the wrong dimension");
  T sum = one - one;
  for (const auto& [e, c] : terms_) {
    T term = from_int(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int p = 0; p < e[i]; ++p) term = term * point[i];
    }
    sum = sum + term;
  }
  return sum;
}

/// Polynomial truncated at total degree `trunc`; never holds a term above it.
struct TruncatedMultiSeries {
  MultiPoly poly;
  int trunc = 0;

  BigInt coefficient(const Exponents& e) const { return poly.coefficient(e); }
  friend bool operator==(const TruncatedMultiSeries&, const TruncatedMultiSeries&) = default;
};

/// num / den to total degree `trunc`; den must have constant term 1.
TruncatedMultiSeries divide_series(const MultiPoly& num, const MultiPoly& den, int trunc);

/// 1 / (1 - h) for h without constant term.
MultiPoly geometric_series(const MultiPoly& h, int trunc);

// Type counting and the rational generating functions of path types.

/// t_k(i): augmented k-Catalan paths with i_j lattice points at level j.
BigInt type_count(const TypeVector& type, int k);

/// Disjoint unions of k-blocks of consecutive integers inside [first, last],
/// each as a sorted list of its 1-based members.
std::vector<std::vector<int>> block_unions(int k, int first, int last);

/// Q_k(x_first..x_last) as a polynomial in nvars variables.
MultiPoly q_poly_range(int k, std::size_t nvars, int first, int last);
/// Q_k(x_1..x_r).
MultiPoly q_poly(int k, int r);

/// x_1 Q_k(x_2..x_r) / Q_k(x_1..x_r) to total degree `trunc`.
TruncatedMultiSeries t_series(int k, int r, int trunc);

/// Expansion of 1/(1/x_1 - 1/(1/x_2 - ... - 1/(1/x_r))).
TruncatedMultiSeries continued_fraction_t2(int r, int trunc);

/// Expansion of x_1/(1 - x_1x_2/(1 - x_2x_3/(...))) deep enough for `trunc`,
/// in max(trunc, 1) variables.
TruncatedMultiSeries flajolet_series(int trunc);

// k-continuants. T needs +, * and copy; `one` fixes the ring element 1.

template <class T>
std::vector<T> continuant_sequence(int k, std::span<const T> x, const T& one) {
  if (k < 2) throw InvalidInput("continuant needs k >= 2");
  std::vector<T> out;
  out.reserve(x.size() + 1);
  out.push_back(one);
  for (std::size_t m = 1; m <= x.size(); ++m) {
    T next = out[m - 1] * x[m - 1];
    if (m >= static_cast<std::size_t>(k)) next = out[m - static_cast<std::size_t>(k)] + next;
    out.push_back(std::move(next));
  }
  return out;
}

/// K_{k,n}(x_1..x_n) by the defining recurrence.
template <class T>
T continuant(int k, std::span<const T> x, const T& one) {
  return continuant_sequence(k, x, one).back();
}

/// M_k(x): x and 1 across the first row, ones on the subdiagonal.
template <class T>
std::vector<std::vector<T>> continuant_step_matrix(int k, const T& x, const T& one, const T& zero) {
  std::vector<std::vector<T>> m(static_cast<std::size_t>(k), std::vector<T>(static_cast<std::size_t>(k), zero));
  m[0][0] = x;
  m[0][static_cast<std::size_t>(k) - 1] = one;
  for (std::size_t i = 1; i < static_cast<std::size_t>(k); ++i) m[i][i - 1] = one;
  return m;
}

/// M_k(x_n)...M_k(x_1) e_1 = (K_{k,n}, K_{k,n-1}, ..., K_{k,n-k+1}); negative
/// orders read as zero.
template <class T>
std::vector<T> continuant_matrix(int k, std::span<const T> x, const T& one, const T& zero) {
  if (k < 2) throw InvalidInput("continuant needs k >= 2");
  std::vector<T> v(static_cast<std::size_t>(k), zero);
  v[0] = one;
  for (const T& xi : x) {
    const auto m = continuant_step_matrix(k, xi, one, zero);
    std::vector<T> next(static_cast<std::size_t>(k), zero);
    for (std::size_t r = 0; r < m.size(); ++r) {
      for (std::size_t c = 0; c < m.size(); ++c) next[r] = next[r] + m[r][c] * v[c];
    }
    v = std::move(next);
  }
  return v;
}

/// Symbolic K_{k,n}(x_1..x_n) by the recurrence.
MultiPoly continuant_symbolic(int k, int n);
/// Symbolic top entry of the matrix product.
MultiPoly continuant_matrix_symbolic(int k, int n);
/// Sum of x_1...x_n with any set of disjoint k-blocks of consecutive variables deleted.
MultiPoly block_deletion_expansion(int k, int n);

/// K_{k,n}(1, ..., 1) for n = 0..max_n.
std::vector<BigInt> continuant_ones(int k, int max_n);

/// Largest |Q_k(x) - zeta^r x_1...x_r K_{k,r}(1/(zeta x_1), ...)| over the
/// sample points, zeta = exp(i pi / k), in complex double.
double q_continuant_deviation(int k, int r, const std::vector<std::vector<Rational>>& points);
bool q_vs_continuant_check(int k, int r, const std::vector<std::vector<Rational>>& points,
                           double tolerance = 1e-9);

/// `count` points of dimension r with coordinates p/q, 1 <= p, q <= 16, from a
/// fixed-seed generator.
std::vector<std::vector<Rational>> sample_positive_rationals(int r, int count, unsigned seed);

// Dense univariate truncated series over a coefficient ring R.

/// Integer polynomial in y, dense, lowest degree first, no trailing zeros.
class YPoly {
 public:
  YPoly() = default;
  YPoly(long c);  // NOLINT: integers embed as constants
  YPoly(BigInt c);  // NOLINT
  static YPoly from_coefficients(std::vector<BigInt> c);
  static YPoly y();

  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coefficient(std::size_t d) const { return d < c_.size() ? c_[d] : BigInt(0); }
  bool is_zero() const { return c_.empty(); }
  BigInt evaluate(const BigInt& y) const;

  friend YPoly operator+(const YPoly& a, const YPoly& b);
  friend YPoly operator-(const YPoly& a, const YPoly& b);
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  YPoly operator-() const;
  friend bool operator==(const YPoly&, const YPoly&) = default;

  /// Descending, e.g. "y^5 + 4y^3 + 6y^2 + 13y + 18".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

template <class R>
class PowerSeries {
 public:
  PowerSeries() = default;
  /// Coefficients of x^0..x^trunc.
  explicit PowerSeries(int trunc) : c_(static_cast<std::size_t>(trunc) + 1) {}
  PowerSeries(std::vector<R> c) : c_(std::move(c)) {}  // NOLINT

  int trunc() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](std::size_t i) const { return c_[i]; }
  R& operator[](std::size_t i) { return c_[i]; }
  const std::vector<R>& coefficients() const { return c_; }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    return a;
  }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
    return a;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(a.trunc());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return out;
  }
  friend PowerSeries operator*(const R& s, PowerSeries a) {
    for (auto& v : a.c_) v = s * v;
    return a;
  }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  /// 1 / (1 - f); f must have zero constant term.
  static PowerSeries geometric(const PowerSeries& f) {
    if (!(f.c_[0] == R{})) throw InvalidInput("geometric series needs a zero constant term");
    PowerSeries out(f.trunc());
    out.c_[0] = R(1);
    // g = 1 + f g, solved degree by degree.
    for (std::size_t d = 1; d < out.c_.size(); ++d) {
      R acc{};
      for (std::size_t e = 1; e <= d; ++e) acc = acc + f.c_[e] * out.c_[d - e];
      out.c_[d] = acc;
    }
    return out;
  }

 private:
  std::vector<R> c_;
};

using UniSeries = PowerSeries<BigInt>;
using BiSeries = PowerSeries<YPoly>;

BiSeries lift_to_y(const UniSeries& s);
/// Substitute a value for y in every coefficient.
UniSeries evaluate_y(const BiSeries& s, const BigInt& y);

}  // namespace cslab
