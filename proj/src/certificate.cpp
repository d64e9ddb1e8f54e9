// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "kazhdan/errors.hpp"

namespace kazhdan {

namespace {

// Logs of the quantities attached to P^2(F_q), evaluated from log q so that
// q itself never has to be formed.
struct A2Logs {
  double log_points;  // ln(q^2 + q + 1)
  double log_degree;  // ln(q + 1)
  double log_gap;     // ln(1 - sqrt(q)/(q+1))
};

A2Logs a2_logs(const PrimePower& q) {
  const double L = q.log();
  const double inv_q = std::exp(-L);
  A2Logs out;
  out.log_points = 2.0 * L + std::log1p(inv_q + inv_q * inv_q);
  out.log_degree = L + std::log1p(inv_q);
  out.log_gap = std::log1p(-std::exp(0.5 * L - out.log_degree));
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double conjugate_exponent(double p) {
  if (!(p > 1.0)) throw DomainError("p must exceed 1");
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

Certificate certify_fixed_point(KappaBound kappa_p, KappaBound kappa_pstar, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must satisfy 1 < p < infinity");
  if (kappa_p.value < 0.0 || kappa_pstar.value < 0.0) throw DomainError("kappa must be >= 0");
  Certificate c;
  c.p = p;
  c.pstar = conjugate_exponent(p);
  c.kappa_p = kappa_p;
  c.kappa_pstar = kappa_pstar;
  c.condition_p = std::pow(2.0, -1.0 / c.p) * kappa_p.value;
  c.condition_pstar = std::pow(2.0, -1.0 / c.pstar) * kappa_pstar.value;

  const bool both_upper = certifies_upper(kappa_p.method) && certifies_upper(kappa_pstar.method);
  const bool both_below = c.condition_p < 1.0 - kThresholdBand && c.condition_pstar < 1.0 - kThresholdBand;
  const bool blocked =
      (certifies_lower(kappa_p.method) && c.condition_p >= 1.0 + kThresholdBand) ||
      (certifies_lower(kappa_pstar.method) && c.condition_pstar >= 1.0 + kThresholdBand);
  if (both_upper && both_below) {
    c.verdict = Verdict::pass;
  } else if (blocked) {
    c.verdict = Verdict::fail;
  } else {
    c.verdict = Verdict::inconclusive;
  }
  return c;
}

double kazhdan_constant(double kappa_pstar, double pstar) {
  if (!(pstar > 1.0)) throw DomainError("p* must exceed 1");
  return 2.0 * (1.0 - std::pow(2.0, -1.0 / pstar) * kappa_pstar);
}

double a2_p_max(const PrimePower& q) {
  const A2Logs g = a2_logs(q);
  const double num = g.log_points + g.log_degree;
  const double den = 0.5 * (std::log(2.0) + g.log_points + g.log_degree) - std::log(2.0) -
                     0.5 * g.log_gap;
  return num / den;
}

double a2_p_max(std::uint64_t q) { return a2_p_max(factor_prime_power(q)); }

double circle_alpha_threshold(const PrimePower& q) {
  const A2Logs g = a2_logs(q);
  const double num = 0.5 * (std::log(2.0) + g.log_points + g.log_degree) - std::log(2.0) -
                     0.5 * g.log_gap;
  return num / (g.log_points + g.log_degree);
}

double circle_alpha_threshold(std::uint64_t q) {
  return circle_alpha_threshold(factor_prime_power(q));
}

A2Report a2_report(const PrimePower& q) {
  const A2Logs g = a2_logs(q);
  A2Report r;
  r.q = q;
  r.lambda1 = std::exp(g.log_gap);
  r.kappa2 = std::exp(-0.5 * g.log_gap);
  // p < 2 ln(2N) / (ln(2N) - ln(2 lambda1)), N = q^2 + q + 1.
  const double log_2n = std::log(2.0) + g.log_points;
  r.p_branch = 2.0 * log_2n / (log_2n - std::log(2.0) - g.log_gap);
  // p* > 2 ln(N (q+1)) / (ln(2 N (q+1)) + ln lambda1), converted to a bound on p.
  const double log_n_deg = g.log_points + g.log_degree;
  const double pstar_min = 2.0 * log_n_deg / (std::log(2.0) + log_n_deg + g.log_gap);
  r.dual_branch = pstar_min / (pstar_min - 1.0);
  r.p_max = a2_p_max(q);
  r.alpha = circle_alpha_threshold(q);
  r.rep_norm = std::sqrt(2.0 * r.lambda1);
  return r;
}

A2Report a2_report(std::uint64_t q) { return a2_report(factor_prime_power(q)); }

namespace {

PRangeReport p_bounds_impl(double deg_num, double deg_den, std::size_t num_edges,
                           std::size_t num_vertices, double kappa2) {
  if (!(kappa2 > 0.0)) throw DomainError("kappa2 must be positive");
  if (num_edges == 0 || num_vertices == 0) throw DomainError("graph has no edges");
  const double e = static_cast<double>(num_edges);
  const double v = static_cast<double>(num_vertices);
  PRangeReport r;
  r.p0 = (std::log(deg_num) - std::log(2.0 * e)) / (0.5 * std::log(deg_den / e) - std::log(kappa2));
  r.pbar0 = (std::log(v * deg_num) - std::log(2.0)) / (0.5 * std::log(v * deg_den) - std::log(kappa2));
  r.pbar0_star = r.pbar0 > 1.0 ? r.pbar0 / (r.pbar0 - 1.0) : kInfinity;
  r.p_max = std::min(r.p0, r.pbar0_star);
  r.certified = kappa2 < std::sqrt(2.0);
  if (!r.certified) r.note = "no certified range: kappa2 >= sqrt(2)";
  return r;
}

}  // namespace

PRangeReport hyperbolic_p_bounds(double degree, std::size_t num_edges, std::size_t num_vertices,
                                 double kappa2) {
  if (!(degree > 0.0)) throw DomainError("degree must be positive");
  return p_bounds_impl(degree, degree, num_edges, num_vertices, kappa2);
}

PRangeReport hyperbolic_p_bounds(double degree_min, double degree_max, std::size_t num_edges,
                                 std::size_t num_vertices, double kappa2) {
  if (!(degree_min > 0.0) || degree_max < degree_min) throw DomainError("bad degree bounds");
  PRangeReport r = p_bounds_impl(degree_max, degree_min, num_edges, num_vertices, kappa2);
  r.closed_form = false;
  const std::string flag = "irregular graph: min/max degree variant, not the regular closed form";
  r.note = r.note.empty() ? flag : r.note + "; " + flag;
  return r;
}

PRangeReport hyperbolic_p_bounds(const WeightedGraph& graph, double kappa2, bool allow_irregular) {
  const GraphStats s = graph_stats(graph);
  if (s.regular) return hyperbolic_p_bounds(s.degree_max, s.edge_count, s.vertex_count, kappa2);
  if (!allow_irregular) {
    throw DomainError("graph is irregular; the p-range formulas need a single degree");
  }
  return hyperbolic_p_bounds(s.degree_min, s.degree_max, s.edge_count, s.vertex_count, kappa2);
}

double confdim_lower_bound(const PRangeReport& report) {
  if (!report.certified) throw DomainError("p-range report is not certified");
  return report.p_max;
}

double ub_rep_threshold(double kappa2) {
  if (!(kappa2 > 0.0)) throw DomainError("kappa2 must be positive");
  return std::sqrt(2.0) / kappa2;
}

double a2_ub_rep_threshold(std::uint64_t q) {
  const double qd = factor_prime_power(q).value();
  return std::sqrt(2.0 * (1.0 - std::sqrt(qd) / (qd + 1.0)));
}

bool obstruction_check(KappaBound kappa_p_lower, KappaBound kappa_pstar_lower, double p) {
  const double pstar = conjugate_exponent(p);
  const bool first =
      certifies_lower(kappa_p_lower.method) && kappa_p_lower.value >= std::pow(2.0, 1.0 / p);
  const bool second = certifies_lower(kappa_pstar_lower.method) &&
                      kappa_pstar_lower.value >= std::pow(2.0, 1.0 / pstar);
  return first || second;
}

}  // namespace kazhdan
