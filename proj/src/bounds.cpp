#include "bounds.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "codes.hpp"
#include "error.hpp"
#include "solve.hpp"

namespace idcode::bounds {

long lb_log(std::size_t n) {
  long c = 0;
  std::size_t reach = 1;  // 2^c
  while (reach < n + 1) {
    reach *= 2;
    ++c;
  }
  return c;
}

long lb_degree(std::size_t n, std::size_t k) {
  return static_cast<long>((2 * n + k) / (k + 1));
}

long lb_degree_counting(std::size_t n, std::size_t k) {
  return static_cast<long>((2 * n + k + 1) / (k + 2));
}

std::optional<long> lb_discharging(std::size_t n, std::size_t k) {
  const long long target = 6LL * static_cast<long long>(n);
  const long long lin = 2LL * static_cast<long long>(k) + 5;
  long long c = 0;
  while (c * c + lin * c < target) ++c;
  if (c + 1 > static_cast<long long>(k)) return std::nullopt;
  return static_cast<long>(c);
}

Sandwich frac_sandwich(const Rational& frac, std::size_t n) {
  Sandwich s;
  s.lower = frac.ceil();
  double up = frac.to_double() * (1.0 + 2.0 * std::log(static_cast<double>(n)));
  // Two ulps cover the error of to_double, log and the product.
  up = std::nextafter(std::nextafter(up, INFINITY), INFINITY);
  s.upper = up;
  return s;
}

SrgAnalysis srg_analysis(const SrgParams& p) {
  if ((p.n - p.k - 1) * p.mu != p.k * (p.k - p.lambda - 1))
    fail(ErrorCode::SrgIdentityViolated, "(n-k-1)mu != k(k-lambda-1)");
  SrgAnalysis a;
  a.params = p;
  a.d = 2 * p.k - 2 * std::max(p.lambda + 1, p.mu - 1);
  a.primitive = p.mu != 0 && p.mu != p.k;
  a.complement = {p.n, p.n - 1 - p.k, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
  a.degree_root_ok = p.k * p.k >= p.n - 1;
  a.symdiff_root_ok = a.d + 3 > 0 && (a.d + 3) * (a.d + 3) > p.n;
  return a;
}

bool gq_frac_bracket(const Rational& f, long n) {
  const mpq_class& x = f.value();
  const mpq_class x4 = x * x * x * x;
  const mpq_class lower_ok_lhs = mpq_class(n, 32);
  const mpq_class x5 = x4 * x;
  const mpq_class upper = mpq_class(32) * n * n;
  return lower_ok_lhs <= x4 && x5 <= upper;
}

GqAnalysis gq_analysis(long s, long t, bool claimed_transitive) {
  if (s < 1 || t < 1) fail(ErrorCode::BadParams, "quadrangle parameters must be positive");
  GqAnalysis a;
  a.s = s;
  a.t = t;
  a.n = (s * t + 1) * (s + 1);
  a.k = s * (t + 1);
  a.d = 2 * s * (t + 1) - 2 * std::max(s, t);
  if (s > 1 && t > 1) a.higman_ok = t <= s * s && s <= t * t;
  if (claimed_transitive) {
    a.frac = Rational(a.n, std::min(a.k + 1, a.d));
    if (s > 1 && t > 1) a.bracket_ok = gq_frac_bracket(*a.frac, a.n);
  }
  return a;
}

long t2star_lower_bound(long q) {
  if (q == 4) return 9;
  long best = 3 * q - 7;
  const auto n = static_cast<std::size_t>(q * q * q);
  const auto k = static_cast<std::size_t>((q - 1) * (q + 2));
  if (auto c = lb_discharging(n, k)) best = std::max(best, *c);
  return best;
}
long parabolic_lower_bound(long q) { return 3 * q - 4; }
long elliptic_lower_bound(long q) { return 3 * q + 2; }
long hermitian_lower_bound(long q) { return 2 * q * q - 2; }

long t2star_construction_size(long q) { return 3 * q - 3; }
long parabolic_construction_size(long q) { return 5 * q - 2; }
long elliptic_construction_size(long q) { return 5 * q; }
long hermitian_construction_size(long q) { return 5 * q * q - 2; }

namespace {

std::optional<GqParams> family_gq(const std::string& family, long q) {
  if (family == "gq-t2star") return GqParams{q - 1, q + 1};
  if (family == "gq-parabolic") return GqParams{q, q};
  if (family == "gq-elliptic") return GqParams{q, q * q};
  if (family == "gq-hermitian") return GqParams{q * q, q};
  return std::nullopt;
}

std::optional<FamilyBounds> stated_family_bounds(const std::string& family, long q) {
  auto make = [](long lower, long upper, std::string lower_basis, std::string upper_basis) {
    FamilyBounds fb;
    fb.lower = lower;
    fb.upper = upper;
    fb.lower_basis = std::move(lower_basis);
    fb.upper_basis = std::move(upper_basis);
    return fb;
  };
  if (family == "gq-t2star")
    return make(t2star_lower_bound(q), t2star_construction_size(q),
                q == 4 ? "lower bound for GQ(q-1,q+1), printed value for q = 4"
                       : "discharging bound for GQ(q-1,q+1), at least 3q-7",
                "three lines through the nucleus, pruned: 3q-3");
  if (family == "gq-parabolic")
    return make(parabolic_lower_bound(q), parabolic_construction_size(q), "lower bound for GQ(q,q): 3q-4",
                "three disjoint lines plus two transversals: 5q-2");
  if (family == "gq-elliptic")
    return make(elliptic_lower_bound(q), elliptic_construction_size(q), "lower bound for GQ(q,q^2): 3q+2",
                "five lines in two hyperbolic 3-spaces: 5q");
  if (family == "gq-hermitian")
    return make(hermitian_lower_bound(q), hermitian_construction_size(q), "lower bound for GQ(q^2,q): 2q^2-2",
                "three disjoint lines plus two transversals: 5q^2-2");
  return std::nullopt;
}

}  // namespace

bool family_lower_bound_follows(const std::string& family, long q) {
  auto gq = family_gq(family, q);
  if (!gq) return false;
  if (family == "gq-t2star" && q == 4) return true;
  const long n = (gq->s * gq->t + 1) * (gq->s + 1), k = gq->s * (gq->t + 1);
  const long derived = lb_discharging(static_cast<std::size_t>(n), static_cast<std::size_t>(k)).value_or(k);
  long printed = 0;
  if (family == "gq-t2star") printed = t2star_lower_bound(q);
  if (family == "gq-parabolic") printed = parabolic_lower_bound(q);
  if (family == "gq-elliptic") printed = elliptic_lower_bound(q);
  if (family == "gq-hermitian") printed = hermitian_lower_bound(q);
  return printed <= derived;
}

std::optional<FamilyBounds> family_bounds(const std::string& family, long q) {
  auto fb = stated_family_bounds(family, q);
  if (fb) fb->lower_follows = family_lower_bound_follows(family, q);
  return fb;
}

long BoundsReport::best_lower() const {
  long best = 0;
  for (const auto& b : lower_bounds)
    if (b.applicable) best = std::max(best, b.value);
  return best;
}

long BoundsReport::best_upper() const {
  long best = LONG_MAX;
  for (const auto& b : upper_bounds)
    if (b.applicable && !b.real_value) best = std::min(best, b.value);
  return best;
}

bool BoundsReport::consistent() const {
  for (const auto& lo : lower_bounds) {
    if (!lo.applicable) continue;
    for (const auto& up : upper_bounds) {
      if (!up.applicable) continue;
      if (up.real_value ? static_cast<double>(lo.value) > *up.real_value : lo.value > up.value) return false;
    }
  }
  return true;
}

namespace {

BoundEntry entry(std::string name, long value, std::string basis) {
  BoundEntry e;
  e.name = std::move(name);
  e.applicable = true;
  e.value = value;
  e.basis = std::move(basis);
  return e;
}

BoundEntry skipped(std::string name, std::string basis, std::string reason) {
  BoundEntry e;
  e.name = std::move(name);
  e.basis = std::move(basis);
  e.reason = std::move(reason);
  return e;
}

}  // namespace

BoundsReport report(const Graph& g, const ReportOptions& opts) {
  BoundsReport r;
  r.n = g.n();
  if (g.n() == 0) return r;
  std::tie(r.k_min, r.k_max) = degrees(g);
  r.d = g.n() >= 2 ? min_symdiff(g) : 0;
  r.twin_free = g.n() >= 2 && r.d > 0;
  const bool has_edge = g.num_edges() > 0;

  const char* log_basis = "distinct nonempty traces: log2(n+1)";
  if (r.twin_free && has_edge)
    r.lower_bounds.push_back(entry("log", lb_log(g.n()), log_basis));
  else
    r.lower_bounds.push_back(skipped("log", log_basis, r.twin_free ? "graph has no edge" : "graph has twins"));

  // At most c vertices see a single codeword, the others see two or more, and
  // codewords lie in at most c(k+1) closed neighbourhoods: 2n - c <= c(k+1).
  const char* degree_basis = "counting with maximum degree: 2n/(k+2)";
  if (r.twin_free)
    r.lower_bounds.push_back(entry("degree", lb_degree_counting(g.n(), r.k_max), degree_basis));
  else
    r.lower_bounds.push_back(skipped("degree", degree_basis, "graph has twins"));
  r.lower_bounds.push_back(skipped("degree-k+1", "2n/(k+1) as usually quoted",
                                   "would give " + std::to_string(lb_degree(g.n(), r.k_max)) +
                                       "; fails on C8, which has an identifying code of size 4 < 16/3"));

  const char* dis_basis = "discharging: n <= c^2/6 + (2k+5)c/6 when k >= c+1";
  if (!r.twin_free) {
    r.lower_bounds.push_back(skipped("discharging", dis_basis, "graph has twins"));
  } else if (auto c = lb_discharging(g.n(), r.k_max)) {
    r.lower_bounds.push_back(entry("discharging", *c, dis_basis));
  } else {
    r.lower_bounds.push_back(skipped("discharging", dis_basis, "bound exceeds k-1, so k >= c+1 fails"));
  }

  if (r.twin_free) {
    const bool closed = r.k_min == r.k_max && g.meta().claimed_vertex_transitive;
    if (closed) {
      r.frac_value = frac_closed_form(g);
      r.frac_source = "closed form";
    } else if (g.n() <= opts.lp_max_vertices) {
      r.frac_value = frac_lp(build_hitting_instance(g));
      r.frac_source = "lp";
    }
  }
  const char* frac_basis = "fractional relaxation: frac <= gamma <= frac (1 + 2 ln n)";
  if (r.frac_value && g.n() >= 3) {
    auto s = frac_sandwich(*r.frac_value, g.n());
    r.lower_bounds.push_back(entry("fractional", s.lower, frac_basis));
    auto up = entry("fractional-greedy", static_cast<long>(std::floor(s.upper)), frac_basis);
    up.real_value = s.upper;
    r.upper_bounds.push_back(up);
  } else {
    const std::string why = !r.twin_free ? "graph has twins" : g.n() < 3 ? "needs n >= 3" : "fractional value not computed";
    r.lower_bounds.push_back(skipped("fractional", frac_basis, why));
    r.upper_bounds.push_back(skipped("fractional-greedy", frac_basis, why));
  }

  const char* trivial_basis = "twin-free with an edge: n-1";
  if (r.twin_free && has_edge)
    r.upper_bounds.push_back(entry("trivial", static_cast<long>(g.n()) - 1, trivial_basis));
  else
    r.upper_bounds.push_back(skipped("trivial", trivial_basis, r.twin_free ? "graph has no edge" : "graph has twins"));

  const auto& meta = g.meta();
  if (!meta.params.empty()) {
    if (auto fb = family_bounds(meta.family, meta.params.front())) {
      auto lower = entry("family", fb->lower, fb->lower_basis);
      if (!fb->lower_follows) {
        lower.applicable = false;
        lower.reason = "stated bound does not follow from the discharging inequality at this q";
      }
      r.lower_bounds.push_back(lower);
      r.upper_bounds.push_back(entry("construction", fb->upper, fb->upper_basis));
    }
  }

  r.srg = check_srg(g);
  if (r.srg) r.srg_info = srg_analysis(*r.srg);
  if (meta.claimed_gq) {
    r.gq = meta.claimed_gq;
    r.gq_info = gq_analysis(meta.claimed_gq->s, meta.claimed_gq->t, meta.claimed_vertex_transitive);
  }
  return r;
}

}  // namespace idcode::bounds
