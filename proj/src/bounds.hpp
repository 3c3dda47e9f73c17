#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace idcode::bounds {

/// ceil(log2(n + 1)).
long lb_log(std::size_t n);
/// ceil(2n / (k + 1)), k the maximum degree, in the form it is usually quoted.
/// Not a valid bound in general: C8 has an identifying code of size 4 < 16/3.
long lb_degree(std::size_t n, std::size_t k);
/// ceil(2n / (k + 2)), the counting bound that holds for every twin-free graph.
long lb_degree_counting(std::size_t n, std::size_t k);
/// Smallest c with 6n <= c^2 + (2k + 5)c. Only valid when such a code would
/// still have c <= k - 1; absent otherwise.
std::optional<long> lb_discharging(std::size_t n, std::size_t k);

struct Sandwich {
  long lower = 0;      // ceil(frac)
  double upper = 0.0;  // frac * (1 + 2 ln n), rounded up to the next double
};
Sandwich frac_sandwich(const Rational& frac, std::size_t n);

struct SrgAnalysis {
  SrgParams params;
  long d = 0;  // 2k - 2 max(lambda + 1, mu - 1)
  bool primitive = false;
  SrgParams complement;
  // Both only meaningful for primitive graphs.
  bool degree_root_ok = false;  // k >= sqrt(n - 1)
  bool symdiff_root_ok = false; // d > sqrt(n) - 3
};
/// Throws SrgIdentityViolated when (n - k - 1) mu != k (k - lambda - 1).
SrgAnalysis srg_analysis(const SrgParams& p);

struct GqAnalysis {
  long s = 0, t = 0;
  long n = 0, k = 0, d = 0;
  std::optional<bool> higman_ok;  // t <= s^2 and s <= t^2, when s, t > 1
  std::optional<Rational> frac;   // n / min(k + 1, d), when claimed transitive
  std::optional<bool> bracket_ok; // 2^(-5/4) n^(1/4) <= frac <= 2 n^(2/5), when s, t > 1
};
GqAnalysis gq_analysis(long s, long t, bool claimed_transitive);

/// Exact check of 2^(-5/4) n^(1/4) <= f <= 2 n^(2/5).
bool gq_frac_bracket(const Rational& f, long n);

// Lower bounds on identifying codes of the four quadrangle families. For
// T2*(O) the value for q = 4 is the printed 9; otherwise the best of 3q - 7
// and the discharging bound on (q^3, q^2 + q - 2).
long t2star_lower_bound(long q);
long parabolic_lower_bound(long q);  // 3q - 4
long elliptic_lower_bound(long q);   // 3q + 2
long hermitian_lower_bound(long q);  // 2q^2 - 2

// Sizes of the geometric constructions.
long t2star_construction_size(long q);     // 3q - 3
long parabolic_construction_size(long q);  // 5q - 2
long elliptic_construction_size(long q);   // 5q
long hermitian_construction_size(long q);  // 5q^2 - 2

/// Lower and upper bounds for a family name as produced by the generators
/// ("gq-t2star", ...). Absent for other families.
struct FamilyBounds {
  long lower = 0;
  long upper = 0;
  bool lower_follows = true;  // see family_lower_bound_follows
  std::string lower_basis, upper_basis;
};
std::optional<FamilyBounds> family_bounds(const std::string& family, long q);

/// Whether the stated family lower bound follows from the discharging
/// inequality on (n, k) of GQ(s,t) at this q. When no c <= k-1 satisfies the
/// inequality every code has at least k vertices, and k is used instead.
/// T2*(O) at q = 4 is taken from its printed statement. Q-(5,q) fails for q < 5.
bool family_lower_bound_follows(const std::string& family, long q);

struct BoundEntry {
  std::string name;
  bool applicable = false;
  long value = 0;                   // integer bounds
  std::optional<double> real_value; // real-valued bounds (value then holds the floor)
  std::string basis;                // what the bound rests on
  std::string reason;               // why it is not applicable
};

struct BoundsReport {
  std::size_t n = 0;
  std::size_t k_min = 0, k_max = 0;
  std::size_t d = 0;
  bool twin_free = false;
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  std::optional<Rational> frac_value;
  std::string frac_source;  // "closed form" or "lp"
  std::optional<SrgParams> srg;
  std::optional<SrgAnalysis> srg_info;
  std::optional<GqParams> gq;
  std::optional<GqAnalysis> gq_info;

  long best_lower() const;
  /// Integer upper bounds only; LONG_MAX when none applies.
  long best_upper() const;
  /// Every applicable lower bound is at most every applicable upper bound.
  bool consistent() const;
};

struct ReportOptions {
  std::size_t lp_max_vertices = 64;  // LP is skipped above this when no closed form applies
};

BoundsReport report(const Graph& g, const ReportOptions& opts = {});

}  // namespace idcode::bounds
