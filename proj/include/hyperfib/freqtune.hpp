#ifndef HYPERFIB_FREQTUNE_HPP
#define HYPERFIB_FREQTUNE_HPP

#include <vector>

#include "hyperfib/dynamics.hpp"
#include "hyperfib/hypergraph.hpp"

namespace hyperfib {

struct FrequencyAssignment {
  std::vector<double> omega;
  double target_frequency = 0.0;
};

struct DeltaBound {
  std::vector<double> kappa;
  double tau = 0.0;
  double delta_max = 0.0;
};

struct StabilityMargin {
  double cos_alpha2 = 0.0;
  double cos_alpha3 = 0.0;
  bool stable = false;
};

// omega_i = Omega + sigma2 k2_i sin(alpha2) + sigma3 k3_i sin(alpha3):
// degree-weighted compensation so every node starts at frequency Omega.
FrequencyAssignment assign_frequencies(const DegreeProfile& d, double omega_target,
                                       const KuramotoParams& p);

// kappa_i = |sigma2 cos a2| k2_i + 2 |sigma3 cos a3| k3_i;
// delta_max = min(tau / max kappa, 0.1), with the 0.1 cap taking over when
// max kappa vanishes.
DeltaBound delta_max(const DegreeProfile& d, double tau, const KuramotoParams& p);

// Stable iff both cosines are strictly positive.
StabilityMargin stability_margin(double alpha2, double alpha3);

}  // namespace hyperfib

#endif
