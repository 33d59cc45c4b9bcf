#include "hyperfib/freqtune.hpp"

#include <algorithm>
#include <cmath>

namespace hyperfib {

FrequencyAssignment assign_frequencies(const DegreeProfile& d, double omega_target,
                                       const KuramotoParams& p) {
  FrequencyAssignment a;
  a.target_frequency = omega_target;
  a.omega.resize(d.node_count);
  for (int i = 0; i < d.node_count; ++i) {
    int k2 = d.rank >= 2 ? d.k(i, 2) : 0;
    int k3 = d.rank >= 3 ? d.k(i, 3) : 0;
    a.omega[i] = omega_target + p.sigma2 * k2 * std::sin(p.alpha2) +
                 p.sigma3 * k3 * std::sin(p.alpha3);
  }
  return a;
}

DeltaBound delta_max(const DegreeProfile& d, double tau, const KuramotoParams& p) {
  DeltaBound b;
  b.tau = tau;
  b.kappa.resize(d.node_count);
  double c2 = std::abs(p.sigma2 * std::cos(p.alpha2));
  double c3 = std::abs(p.sigma3 * std::cos(p.alpha3));
  double max_kappa = 0.0;
  for (int i = 0; i < d.node_count; ++i) {
    int k2 = d.rank >= 2 ? d.k(i, 2) : 0;
    int k3 = d.rank >= 3 ? d.k(i, 3) : 0;
    b.kappa[i] = c2 * k2 + 2.0 * c3 * k3;
    max_kappa = std::max(max_kappa, b.kappa[i]);
  }
  b.delta_max = max_kappa > 0.0 ? std::min(tau / max_kappa, 0.1) : 0.1;
  return b;
}

StabilityMargin stability_margin(double alpha2, double alpha3) {
  StabilityMargin m;
  m.cos_alpha2 = std::cos(alpha2);
  m.cos_alpha3 = std::cos(alpha3);
  // strict positivity with a tolerance so the marginal right angle, whose
  // cosine rounds to ~6e-17, is classified as not stable
  constexpr double kEps = 1e-12;
  m.stable = m.cos_alpha2 > kEps && m.cos_alpha3 > kEps;
  return m;
}

}  // namespace hyperfib
