// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kazhdan/finite_field.hpp"
#include "kazhdan/graph.hpp"
#include "kazhdan/poincare.hpp"

namespace kazhdan {

/// A kappa value tagged with the method that produced it.
struct KappaBound {
  double value = 0.0;
  Method method = Method::eigen;
};

enum class Verdict { pass, fail, inconclusive };
std::string_view to_string(Verdict v);

/// Condition values within this distance of 1 are inconclusive.
inline constexpr double kThresholdBand = 1e-9;

struct Certificate {
  double p = 2.0;
  double pstar = 2.0;
  KappaBound kappa_p;
  KappaBound kappa_pstar;
  double condition_p = 0.0;      // 2^{-1/p} kappa_p
  double condition_pstar = 0.0;  // 2^{-1/p*} kappa_{p*}
  Verdict verdict = Verdict::inconclusive;
};

/// Fixed-point criterion max{2^{-1/p} kappa_p, 2^{-1/p*} kappa_{p*}} < 1.
///
/// pass needs both condition values below 1 - kThresholdBand and both
/// inputs from upper-certifying methods. fail needs some input from a
/// lower-certifying method whose condition value is at least
/// 1 + kThresholdBand. Everything else is inconclusive. Throws DomainError
/// for p <= 1.
Certificate certify_fixed_point(KappaBound kappa_p, KappaBound kappa_pstar, double p);

/// 2 (1 - 2^{-1/p*} kappa_{p*}); non-positive values certify nothing.
double kazhdan_constant(double kappa_pstar, double pstar);

/// Conjugate exponent p / (p - 1).
double conjugate_exponent(double p);

/// Both branches of the admissible p-range for the A~2 group G_q.
struct A2Report {
  PrimePower q;
  double lambda1 = 0.0;       // 1 - sqrt(q)/(q+1)
  double kappa2 = 0.0;
  double p_branch = 0.0;      // bound from 2^{-1/p} kappa_p < 1
  double dual_branch = 0.0;   // bound on p from 2^{-1/p*} kappa_{p*} < 1
  double p_max = 0.0;         // the closed-form upper end of the range
  double alpha = 0.0;         // circle-action threshold
  double rep_norm = 0.0;      // uniformly bounded representation threshold
};

A2Report a2_report(const PrimePower& q);
A2Report a2_report(std::uint64_t q);

/// Upper end of the p-range [2, p_max) for G_q:
///   [ln(q^2+q+1) + ln(q+1)] /
///   [1/2 ln(2(q^2+q+1)(q+1)) - ln 2 - ln sqrt(1 - sqrt(q)/(q+1))].
/// The factored overload accepts prime powers beyond 64 bits.
double a2_p_max(std::uint64_t q);
double a2_p_max(const PrimePower& q);

struct PRangeReport {
  std::string id;
  double p0 = 0.0;
  double pbar0 = 0.0;
  double pbar0_star = 0.0;
  double p_max = 0.0;  // min{p0, pbar0*}
  bool certified = false;
  /// False for the min/max-degree variant on irregular graphs.
  bool closed_form = true;
  std::string note;
};

/// p0 = [ln deg - ln(2 #E)] / [1/2 ln(deg/#E) - ln kappa2] and
/// pbar0 = [ln(#V deg) - ln 2] / [1/2 ln(#V deg) - ln kappa2]. Reports an
/// uncertified range when kappa2 >= sqrt(2).
PRangeReport hyperbolic_p_bounds(double degree, std::size_t num_edges,
                                 std::size_t num_vertices, double kappa2);

/// Conservative variant for irregular graphs: largest degree in the
/// numerators, smallest in the denominators. Marked closed_form = false.
PRangeReport hyperbolic_p_bounds(double degree_min, double degree_max, std::size_t num_edges,
                                 std::size_t num_vertices, double kappa2);

/// From a graph and its kappa2. Irregular graphs are refused with a
/// DomainError unless allow_irregular is set.
PRangeReport hyperbolic_p_bounds(const WeightedGraph& graph, double kappa2,
                                 bool allow_irregular = false);

/// min{p0, pbar0*}; DomainError for an uncertified report.
double confdim_lower_bound(const PRangeReport& report);

/// sqrt(2) / kappa2.
double ub_rep_threshold(double kappa2);
/// sqrt(2 (1 - sqrt(q)/(q+1))).
double a2_ub_rep_threshold(std::uint64_t q);

/// Smallest alpha for which C^{1+alpha} circle actions of G_q are finite;
/// the reciprocal of a2_p_max.
double circle_alpha_threshold(std::uint64_t q);
double circle_alpha_threshold(const PrimePower& q);

/// True iff some lower-certified input meets its 2^{1/p} threshold, i.e.
/// the fixed-point criterion is provably out of reach at this p. Inputs
/// whose method does not certify lower bounds are ignored.
bool obstruction_check(KappaBound kappa_p_lower, KappaBound kappa_pstar_lower, double p);

}  // namespace kazhdan
