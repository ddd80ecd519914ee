#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cslab/permutation.hpp"
#include "cslab/series.hpp"

namespace cslab {

/// A permutation class given by a pattern-level membership predicate. The
/// predicate sees permutations of 1..m in one-line notation.
struct PermClass {
  std::string name;
  std::function<bool(std::span<const int>)> contains;

  static PermClass all();
  /// Foata-Strehl tree is levelwise numbered.
  static PermClass short_csp();
  /// Levelwise numbered and every right chain has length divisible by k-1.
  static PermClass short_k_csp(int k);
  /// Built-in by name: "all", "short-csp", "short-k-csp" (needs k).
  static PermClass by_name(const std::string& name, int k = 2);
};

/// w = w1 w2 w3: letters of w1 and w3 below x, letters of w2 at least x, x at
/// an end of w2.
struct Decomposition {
  std::vector<int> w1;
  std::vector<int> w2;
  std::vector<int> w3;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

std::optional<Decomposition> x_decompose(std::span<const int> w, int x);
/// Moves x to the other end of w2; identity when w is not x-decomposable.
std::vector<int> flip(std::span<const int> w, int x);
Permutation flip(const Permutation& w, int x);

/// {i < n : w is i-decomposable}, ascending.
std::vector<int> flip_set(std::span<const int> w);

/// For each i in the flip set, letter i+1 lies to the right of letter i.
bool is_distinguished(std::span<const int> w);

struct OrbitRecord {
  Permutation rep;
  std::vector<int> flip_indices;
  BigInt size;
  /// Filled only on request, in lexicographic order.
  std::vector<Permutation> members;
};

/// All 2^|I| images of a distinguished representative under the flips in I.
std::vector<Permutation> orbit_members(const Permutation& rep);

/// Thrown when a flip leaves the class.
class FlipClosureError : public InvalidInput {
 public:
  FlipClosureError(Permutation member, int x, Permutation image, const std::string& class_name);
  Permutation member;
  int x;
  Permutation image;
};

/// Visits the class members of S_n in lexicographic order. Shards by first
/// letter across threads (capped by CS_LAB_THREADS) and replays in order.
void visit_class_members(const PermClass& cls, int n,
                         const std::function<void(const Permutation&)>& visit);

/// Orbits of the restricted Foata-Strehl action on the class members of S_n,
/// ordered by representative. Verifies flip closure along the way.
std::vector<OrbitRecord> orbits(const PermClass& cls, int n, bool with_members = false);

struct OrbitCounts {
  /// Index n: P_n = class members of S_n, O_n = orbits.
  std::vector<BigInt> members;
  std::vector<BigInt> orbit_count;
  /// [n][j]: members in / number of orbits of size 2^j.
  std::vector<std::vector<BigInt>> members_by_size;
  std::vector<std::vector<BigInt>> orbits_by_size;
};

/// Brute-force counts for n = 1..max_n (index 0 stays zero).
OrbitCounts count_orbits(const PermClass& cls, int max_n);

struct OrbitSeries {
  UniSeries P;
  UniSeries O;
  BiSeries Pxy;
  BiSeries Oxy;
  /// O = P/(1+P), P(x,y) = P/(1-2(y-1)P), O(x,y) = P/(1-(y-2)P) from the raw P.
  UniSeries O_closed;
  BiSeries Pxy_closed;
  BiSeries Oxy_closed;
  bool agrees() const { return O == O_closed && Pxy == Pxy_closed && Oxy == Oxy_closed; }
};

OrbitSeries orbit_series(const PermClass& cls, int max_n);

/// O(x) = P(x)/(1+P(x)).
UniSeries orbit_gf_from_members(const UniSeries& P);
/// P(x,y) = P(x)/(1-2(y-1)P(x)).
BiSeries refined_member_gf(const UniSeries& P);
/// O(x,y) = P(x)/(1-(y-2)P(x)).
BiSeries refined_orbit_gf(const UniSeries& P);

struct CompatibilityReport {
  bool ok = true;
  std::string counterexample;
};

/// Checks, for all n <= max_n, members w and letters x with w x-decomposable,
/// that flip(w, x), pattern(w2) and pattern(w1 w3) all lie in the class.
CompatibilityReport check_compatible(const PermClass& cls, int max_n);

/// Worker count from CS_LAB_THREADS (default: hardware concurrency), at least 1.
unsigned worker_threads();

}  // namespace cslab
