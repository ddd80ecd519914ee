#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cslab/common.hpp"

namespace cslab {

enum class Step : std::uint8_t { Up, Down };

enum class PathKind : std::uint8_t { Catalan, Augmented, Bridge };

std::string_view to_string(PathKind kind);
PathKind parse_path_kind(std::string_view text);

/// A lattice path over Up = (1,1) and Down = (1,1-k).
struct LatticePath {
  int k = 2;
  PathKind kind = PathKind::Catalan;
  std::vector<Step> steps;

  static LatticePath parse(std::string_view steps, int k, PathKind kind);

  std::string step_string() const;
  int up_count() const;
  int down_count() const;
  /// Heights after each step; heights()[0] is the height after step 1.
  std::vector<long> heights() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

BigInt fuss_catalan(long n, long k);

bool validate(const LatticePath& path);

/// Visits every k-Catalan path of order n once, lexicographically with Up < Down.
void visit_catalan(int n, int k, const std::function<void(const LatticePath&)>& visit);
/// Same order and contract for bridges: all binom(kn, n) arrangements.
void visit_bridges(int n, int k, const std::function<void(const LatticePath&)>& visit);

std::vector<LatticePath> enumerate_catalan(int n, int k);
std::vector<LatticePath> enumerate_bridges(int n, int k);

LatticePath augment(const LatticePath& path);
/// Inverse of augment: drops the initial Up of an augmented path.
LatticePath deaugment(const LatticePath& path);

/// Steps whose start and end heights sum to a positive number (k = 2 bridges only).
int steps_above_axis(const LatticePath& bridge);
/// Up steps that start strictly below the axis.
int up_steps_below_axis(const LatticePath& bridge);

// Cyclic shift statistics on integer and rational vectors.

using IntVector = std::vector<std::int64_t>;

/// Positive partial sums of the shift starting at `shift`, over windows 1..m-1.
int huq_statistic(std::span<const std::int64_t> v, std::size_t shift);
std::vector<int> huq_profile(std::span<const std::int64_t> v);

/// Thrown by spitzer_profile when a proper cyclic window sums to zero.
class VanishingWindow : public InvalidInput {
 public:
  VanishingWindow(std::size_t start, std::size_t length);
  std::size_t start;
  std::size_t length;
};

/// Positive partial sums over windows 1..m for every shift. Entries must sum
/// to zero with no vanishing proper cyclic window.
std::vector<int> spitzer_profile(std::span<const Rational> x);

/// x_i = y_i - 1/m.
std::vector<Rational> spitzer_shift(std::span<const std::int64_t> y);

struct LatticePoint {
  long u;
  long w;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Points (i, v_i), i = 0..m-1, of the path of v sorted by F(u,w) = w - u/m.
std::vector<LatticePoint> functional_order(std::span<const std::int64_t> v);

}  // namespace cslab
