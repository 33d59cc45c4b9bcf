#ifndef HYPERFIB_DYNAMICS_HPP
#define HYPERFIB_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "hyperfib/hypergraph.hpp"
#include "hyperfib/partition.hpp"

namespace hyperfib {

struct KuramotoParams {
  double sigma2 = 0.0;
  double sigma3 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  std::vector<double> omega;
  std::vector<double> theta0;
  double dt = 0.1;
  double t_max = 100.0;

  void validate(int node_count) const;
};

// Pairwise and triple co-memberships compiled from the hyperedge list, one
// entry per occurrence, in stored hyperedge order. Only orders 2 and 3
// enter the dynamics.
struct CouplingStructure {
  std::vector<std::vector<int>> pair_partners;
  std::vector<std::vector<std::pair<int, int>>> triple_partners;

  static CouplingStructure compile(const Hypergraph& h);
  int node_count() const { return static_cast<int>(pair_partners.size()); }
};

struct Trajectory {
  std::vector<double> times;
  // phases[step][node], unwrapped radians; row 0 equals theta0.
  std::vector<std::vector<double>> phases;

  int step_count() const { return static_cast<int>(times.size()); }
  int node_count() const {
    return phases.empty() ? 0 : static_cast<int>(phases.front().size());
  }
};

// theta_dot_i = omega_i + sigma2 * sum sin(theta_j - theta_i - alpha2)
//             + sigma3 * sum sin(theta_j + theta_k - 2 theta_i - alpha3),
// summed per incidence in stored hyperedge order.
std::vector<double> rhs(const CouplingStructure& c, const std::vector<double>& theta,
                        const KuramotoParams& p);

// Fixed-step explicit Dormand-Prince 5(4) propagation, output at every step.
Trajectory integrate(const Hypergraph& h, const KuramotoParams& p);
Trajectory integrate(const CouplingStructure& c, const KuramotoParams& p);

struct OrderParameters {
  double global = 0.0;
  std::vector<double> per_class;
};

double global_order_parameter(const std::vector<double>& phases);
OrderParameters order_parameters(const std::vector<double>& phases,
                                 const Partition* p = nullptr);

// Synchrony clusters from a trajectory: nodes pre-grouped by full degree
// sequence, pairs linked when phases agree at sampled times and the
// time-averaged pair order parameter is within epsilon of one, connected
// components of the support graph completed with singletons.
Partition extract_sync_clusters(const Trajectory& t, const DegreeProfile& d,
                                double epsilon, int n_samples, std::uint64_t seed);

// Average global order parameter over a 500-step integration for each
// frustration pair; result indexed [alpha2 index][alpha3 index].
std::vector<std::vector<double>> sweep_frustration(
    const Hypergraph& h, const std::vector<double>& alpha2_values,
    const std::vector<double>& alpha3_values, const KuramotoParams& base);

}  // namespace hyperfib

#endif
