#include "eistrace/lattice.hpp"

#include <algorithm>

#include "eistrace/eisenstein.hpp"
#include "eistrace/jacobi.hpp"
#include "eistrace/partitions.hpp"

namespace eistrace {

namespace {

std::complex<double> half_sum(long j, const std::vector<std::complex<double>>& pts, double s) {
  std::complex<double> acc = 0.0;
  for (const std::complex<double>& om : pts) {
    std::complex<double> w2 = om * om, p = 1.0;
    for (long t = 0; t < j; ++t) p *= w2;
    double damp = (s == 0.0) ? 1.0 : std::pow(std::norm(om), -static_cast<double>(j) * s);
    acc += damp / p;
  }
  return acc;
}

std::complex<double> newton_ek(long k, const std::vector<std::complex<double>>& pts, double s) {
  std::vector<std::complex<double>> p(static_cast<size_t>(k) + 1), e(static_cast<size_t>(k) + 1);
  for (long j = 1; j <= k; ++j) p[static_cast<size_t>(j)] = half_sum(j, pts, s);
  e[0] = 1.0;
  for (long i = 1; i <= k; ++i) {
    std::complex<double> acc = 0.0;
    for (long j = 1; j <= i; ++j) {
      std::complex<double> term = e[static_cast<size_t>(i - j)] * p[static_cast<size_t>(j)];
      acc += (j % 2 == 1) ? term : -term;
    }
    e[static_cast<size_t>(i)] = acc / static_cast<double>(i);
  }
  return e[static_cast<size_t>(k)];
}

std::complex<double> int_power(std::complex<double> z, long k) {
  std::complex<double> r = 1.0;
  for (long i = 0; i < k; ++i) r *= z;
  return r;
}

std::complex<double> torsional_value(long k, const TorsionPoint& x, std::complex<double> tau,
                                     long terms) {
  long L = x.alpha_denom();
  if (x.beta_denom() <= kMaxConductor)
    return eval_qseries(torsional_G<Cyclo>(k, x, terms, L), tau).value;
  return eval_qseries(torsional_G<std::complex<double>>(k, x, terms, L), tau).value;
}

std::complex<double> completed_value(long k, const TorsionPoint& x, std::complex<double> tau,
                                     long terms) {
  std::complex<double> v = torsional_value(k, x, tau, terms);
  if (k == 1) v += x.alpha.get_d();
  if (k == 2) v += 1.0 / (4.0 * std::numbers::pi * tau.imag());
  return v;
}

}  // namespace

std::vector<std::complex<double>> lattice_half_points(std::complex<double> tau, double radius) {
  if (!(radius > 0.0)) throw SeriesDomainError("lattice radius must be positive");
  double y = tau.imag();
  if (!(y > 0.0)) throw SeriesDomainError("lattice needs Im(tau) > 0");
  std::vector<std::complex<double>> pts;
  double r2 = radius * radius;
  for (long d = 1; d <= static_cast<long>(std::floor(radius)); ++d)
    pts.emplace_back(static_cast<double>(d), 0.0);
  long cmax = static_cast<long>(std::floor(radius / y));
  for (long c = 1; c <= cmax; ++c) {
    double w = r2 - c * y * c * y;
    if (w < 0.0) continue;
    double half = std::sqrt(w);
    double center = -c * tau.real();
    long dlo = static_cast<long>(std::ceil(center - half));
    long dhi = static_cast<long>(std::floor(center + half));
    for (long d = dlo; d <= dhi; ++d) {
      std::complex<double> om = static_cast<double>(c) * tau + static_cast<double>(d);
      if (std::norm(om) <= r2 * (1.0 + 1e-15)) pts.push_back(om);
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              double na = std::norm(a), nb = std::norm(b);
              if (na != nb) return na < nb;
              return std::atan2(a.imag(), a.real()) < std::atan2(b.imag(), b.real());
            });
  return pts;
}

std::complex<double> power_sum(long j, const LatticeParams& p) {
  if (j < 1) throw SeriesDomainError("power sum index must be >= 1");
  return 2.0 * half_sum(j, lattice_half_points(p.tau, p.radius), p.s);
}

std::complex<double> elementary_symmetric(long k, const LatticeParams& p) {
  if (k < 1) throw SeriesDomainError("elementary symmetric index must be >= 1");
  return newton_ek(k, lattice_half_points(p.tau, p.radius), p.s);
}

std::complex<double> elementary_symmetric_brute(long k, const LatticeParams& p) {
  if (k < 1) throw SeriesDomainError("elementary symmetric index must be >= 1");
  std::vector<std::complex<double>> e(static_cast<size_t>(k) + 1, 0.0);
  e[0] = 1.0;
  for (const std::complex<double>& om : lattice_half_points(p.tau, p.radius)) {
    double damp = (p.s == 0.0) ? 1.0 : std::pow(std::norm(om), -p.s);
    std::complex<double> v = damp / (om * om);
    for (long t = k; t >= 1; --t)
      e[static_cast<size_t>(t)] += e[static_cast<size_t>(t - 1)] * v;
  }
  return e[static_cast<size_t>(k)];
}

std::complex<double> richardson_limit(const std::vector<double>& schedule,
                                      const std::vector<std::complex<double>>& values) {
  if (schedule.size() != values.size() || values.empty())
    throw SeriesDomainError("extrapolation needs one value per parameter");
  for (size_t i = 0; i + 1 < schedule.size(); ++i)
    if (std::abs(schedule[i + 1] - schedule[i] / 2.0) > 1e-12 * schedule[i])
      throw SeriesDomainError("extrapolation schedule must halve");
  size_t n = values.size();
  std::vector<std::vector<std::complex<double>>> r(n);
  for (size_t i = 0; i < n; ++i) {
    r[i].resize(i + 1);
    r[i][0] = values[i];
    for (size_t j = 1; j <= i; ++j) {
      double f = std::pow(2.0, static_cast<double>(j));
      r[i][j] = (f * r[i][j - 1] - r[i - 1][j - 1]) / (f - 1.0);
    }
  }
  return r[n - 1][n - 1];
}

std::complex<double> eval_G(long weight, std::complex<double> tau, long terms) {
  return eval_qseries(eisenstein_G(weight, terms), tau).value;
}

std::complex<double> eval_G2_star(std::complex<double> tau, long terms) {
  return 1.0 / (4.0 * std::numbers::pi * tau.imag()) + eval_G(2, tau, terms);
}

std::complex<double> lattice_prediction(long k, std::complex<double> tau, long terms) {
  if (k < 1) throw SeriesDomainError("prediction index must be >= 1");
  std::vector<std::complex<double>> g(static_cast<size_t>(k) + 1);
  for (long j = 1; j <= k; ++j)
    g[static_cast<size_t>(j)] = (j == 1) ? eval_G2_star(tau, terms) : eval_G(2 * j, tau, terms);
  std::complex<double> acc = 0.0;
  for (const Partition& lam : partitions_of(k)) {
    std::complex<double> prod = phi_lambda(lam).get_d();
    const auto& m = lam.mult();
    for (size_t j = 0; j < m.size(); ++j)
      for (long t = 0; t < m[j]; ++t) prod *= g[j + 1];
    acc += prod;
  }
  double twopi = 2.0 * std::numbers::pi;
  return std::pow(twopi, 2.0 * static_cast<double>(k)) * acc;
}

Theorem1Numeric theorem1_numeric_check(long k, std::complex<double> tau,
                                       const std::vector<double>& schedule, double radius,
                                       long terms) {
  Theorem1Numeric rep;
  rep.k = k;
  rep.tau = tau;
  rep.radius = radius;
  rep.schedule = schedule;
  std::vector<std::complex<double>> pts = lattice_half_points(tau, radius);
  std::vector<std::complex<double>> values;
  values.reserve(schedule.size());
  for (double s : schedule) values.push_back(newton_ek(k, pts, s));
  rep.lattice_value = richardson_limit(schedule, values);
  rep.prediction = lattice_prediction(k, tau, terms);
  rep.abs_error = std::abs(rep.lattice_value - rep.prediction);
  return rep;
}

ModularityReport modularity_spot_check(long k, const TorsionPoint& x, std::complex<double> tau,
                                       long terms) {
  if (k < 1) throw SeriesDomainError("modularity check needs k >= 1");
  ModularityReport rep;
  rep.k = k;
  rep.x = x;
  rep.xprime = TorsionPoint(x.beta, -x.alpha);
  rep.tau = tau;
  rep.lhs = completed_value(k, x, -1.0 / tau, terms);
  rep.rhs = int_power(tau, k) * completed_value(k, rep.xprime, tau, terms);
  rep.abs_error = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace eistrace
