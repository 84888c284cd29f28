#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "eistrace/divisor.hpp"
#include "eistrace/qseries.hpp"

namespace eistrace {

struct EvalResult {
  std::complex<double> value;
  double tail_bound = 0.0;
};

// Evaluates a truncated q^{1/L}-series at q = e^{2 pi i tau}.  The tail bound
// is |q|^{trunc/L}/(1-|q|).  Points with Im(tau) < 1/2 are rejected: the
// truncations used here are not trustworthy that close to the real axis.
template <class T>
EvalResult eval_qseries(const QSeries<T>& s, std::complex<double> tau) {
  if (!(tau.imag() >= 0.5 - 1e-9))
    throw SeriesDomainError("q-series evaluation needs Im(tau) >= 1/2");
  const std::complex<double> logq(-2.0 * std::numbers::pi * tau.imag(),
                                  2.0 * std::numbers::pi * tau.real());
  std::complex<double> v = 0.0;
  for (const auto& [e, c] : s.coeffs())
    v += ring_traits<T>::embed(c) *
         std::exp(logq * (static_cast<double>(e) / static_cast<double>(s.denom())));
  double aq = std::exp(-2.0 * std::numbers::pi * tau.imag());
  double tail =
      std::pow(aq, static_cast<double>(s.trunc()) / static_cast<double>(s.denom())) / (1.0 - aq);
  return {v, tail};
}

// Ball-ordered summation parameters for the lattice Z tau + Z.
struct LatticeParams {
  std::complex<double> tau{0.0, 1.0};
  double radius = 60.0;
  double s = 0.0;  // Hecke damping |omega|^{-2js}
};

// Nonzero lattice points with |omega| <= radius, one from each pair {w, -w}
// (c > 0, or c = 0 and d > 0), sorted by (|omega|, angle).
std::vector<std::complex<double>> lattice_half_points(std::complex<double> tau, double radius);

// P_j(s) = sum over the full punctured ball of omega^{-2j} |omega|^{-2js},
// accumulated in ball order.
std::complex<double> power_sum(long j, const LatticeParams& p);

// e_k of the set {1/w : w = omega^2 |omega|^{2s}} over the half ball, via
// Newton's identities on p_j = P_j / 2.
std::complex<double> elementary_symmetric(long k, const LatticeParams& p);

// Same e_k summed directly over distinct k-subsets (streaming prefix DP);
// cross-check for small radii.
std::complex<double> elementary_symmetric_brute(long k, const LatticeParams& p);

// Richardson extrapolation to s = 0 assuming a halving schedule s_{i+1} = s_i/2.
std::complex<double> richardson_limit(const std::vector<double>& schedule,
                                      const std::vector<std::complex<double>>& values);

std::complex<double> eval_G(long weight, std::complex<double> tau, long terms);

// G_2^star = 1/(4 pi Im tau) + G_2, the nonholomorphic weight-2 completion.
std::complex<double> eval_G2_star(std::complex<double> tau, long terms);

// (2 pi)^{2k} sum_{lambda |- k} phi_lambda(lambda) prod_j G_{2j}^{m_j} with the
// weight-2 slot evaluated at G_2^star.
std::complex<double> lattice_prediction(long k, std::complex<double> tau, long terms);

struct Theorem1Numeric {
  long k = 0;
  std::complex<double> tau;
  double radius = 0.0;
  std::vector<double> schedule;
  std::complex<double> lattice_value;
  std::complex<double> prediction;
  double abs_error = 0.0;
};

// Hecke-regularized lattice e_k extrapolated to s = 0 against the isobaric
// quasimodular prediction.
Theorem1Numeric theorem1_numeric_check(long k, std::complex<double> tau,
                                       const std::vector<double>& schedule, double radius,
                                       long terms = 40);

struct ModularityReport {
  long k = 0;
  TorsionPoint x;
  TorsionPoint xprime;
  std::complex<double> tau;
  std::complex<double> lhs;  // completed G at -1/tau
  std::complex<double> rhs;  // tau^k times completed G at the rotated point
  double abs_error = 0.0;
};

// Weight-k inversion law for the completed torsional series: the completion
// adds alpha at k = 1 and 1/(4 pi Im tau) at k = 2, and the point transforms
// by (alpha, beta) -> (beta, -alpha) mod 1.
ModularityReport modularity_spot_check(long k, const TorsionPoint& x, std::complex<double> tau,
                                       long terms = 40);

}  // namespace eistrace
