#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperfib/dynamics.hpp"
#include "hyperfib/fibration.hpp"
#include "hyperfib/freqtune.hpp"
#include "hyperfib/hypergraph.hpp"
#include "hyperfib/rng.hpp"

using namespace hyperfib;

namespace {

constexpr double kPi = 3.14159265358979323846;

KuramotoParams tuned_params(int n, double s2 = 0.6, double s3 = 0.8,
                            double a2 = kPi / 3, double a3 = kPi / 6) {
  KuramotoParams p;
  p.sigma2 = s2;
  p.sigma3 = s3;
  p.alpha2 = a2;
  p.alpha3 = a3;
  p.omega.assign(n, 0.0);
  p.theta0.assign(n, 0.0);
  return p;
}

}  // namespace

TEST_CASE("frequency assignment formula") {
  // one node with three pairwise couplings
  Hypergraph h(4, {{0, 1}, {0, 2}, {0, 3}});
  KuramotoParams p = tuned_params(4, 0.6, 0.0, kPi / 3, 0.0);
  FrequencyAssignment a = assign_frequencies(degrees(h), 2.0, p);
  CHECK(a.target_frequency == 2.0);
  CHECK(a.omega[0] == doctest::Approx(2.0 + 1.8 * std::sqrt(3.0) / 2.0));
  // leaves have one pairwise coupling
  CHECK(a.omega[1] == doctest::Approx(2.0 + 0.6 * std::sqrt(3.0) / 2.0));
}

TEST_CASE("isolated node keeps the target frequency") {
  Hypergraph h(2, {{1, 1}});  // node 0 isolated
  KuramotoParams p = tuned_params(2);
  FrequencyAssignment a = assign_frequencies(degrees(h), 3.5, p);
  CHECK(a.omega[0] == 3.5);
}

TEST_CASE("equal degree sequences get equal frequencies") {
  Hypergraph h = random_hypergraph(25, 35, 15, 6);
  DegreeProfile d = degrees(h);
  KuramotoParams p = tuned_params(h.node_count());
  FrequencyAssignment a = assign_frequencies(d, 2.0, p);
  for (int i = 0; i < h.node_count(); ++i)
    for (int j = 0; j < h.node_count(); ++j)
      if (d.sequence(i) == d.sequence(j)) CHECK(a.omega[i] == a.omega[j]);
}

TEST_CASE("tuned frequencies give an exact synchronized fixed point") {
  Hypergraph h = random_hypergraph(30, 40, 20, 12);
  KuramotoParams p = tuned_params(h.node_count());
  const double Omega = 2.0;
  p.omega = assign_frequencies(degrees(h), Omega, p).omega;
  p.theta0.assign(h.node_count(), kPi / 3);

  CouplingStructure c = CouplingStructure::compile(h);
  for (double dot : rhs(c, p.theta0, p))
    CHECK(dot == doctest::Approx(Omega).epsilon(1e-12));

  Trajectory t = integrate(h, p);
  for (int s = 0; s < t.step_count(); ++s) {
    CHECK(global_order_parameter(t.phases[s]) >= 1.0 - 1e-9);
    for (double th : t.phases[s])
      CHECK(th == doctest::Approx(kPi / 3 + Omega * t.times[s]).epsilon(1e-8));
  }
}

TEST_CASE("delta bound values") {
  // profile with max k2 = 4, max k3 = 3
  Hypergraph h(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                   {0, 1, 2}, {0, 3, 4}, {0, 1, 5}});
  DegreeProfile d = degrees(h);
  REQUIRE(d.k(0, 2) == 4);
  REQUIRE(d.k(0, 3) == 3);
  KuramotoParams p = tuned_params(6, 0.6, 0.8, kPi / 3, kPi / 3);

  DeltaBound b = delta_max(d, 0.5, p);
  CHECK(b.kappa[0] == doctest::Approx(3.6));
  CHECK(b.delta_max == doctest::Approx(0.1));

  DeltaBound tight = delta_max(d, 0.1, p);
  CHECK(tight.delta_max == doctest::Approx(0.1 / 3.6));

  // monotone nondecreasing in tau, capped at 0.1
  double prev = 0.0;
  for (double tau : {0.01, 0.05, 0.2, 0.5, 2.0}) {
    DeltaBound cur = delta_max(d, tau, p);
    CHECK(cur.delta_max >= prev);
    CHECK(cur.delta_max <= 0.1);
    prev = cur.delta_max;
  }

  KuramotoParams flat = tuned_params(6, 0.6, 0.8, kPi / 2, kPi / 2);
  CHECK(delta_max(d, 0.5, flat).delta_max == doctest::Approx(0.1));
}

TEST_CASE("stability margin") {
  CHECK(stability_margin(kPi / 3, kPi / 6).stable);
  CHECK_FALSE(stability_margin(3 * kPi / 5, kPi / 3).stable);
  StabilityMargin marginal = stability_margin(kPi / 2, kPi / 2);
  CHECK_FALSE(marginal.stable);
  CHECK(marginal.cos_alpha2 == doctest::Approx(0.0));
}

TEST_CASE("linearized bound holds at t=0 across seeds") {
  Hypergraph h = random_hypergraph(40, 60, 25, 3);
  DegreeProfile d = degrees(h);
  KuramotoParams p = tuned_params(h.node_count());
  const double Omega = 2.0;
  const double tau = 0.5;
  p.omega = assign_frequencies(degrees(h), Omega, p).omega;
  DeltaBound b = delta_max(d, tau, p);
  CouplingStructure c = CouplingStructure::compile(h);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SplitMix64 rng(seed);
    std::vector<double> theta(h.node_count());
    double mean_dev = 0.0;
    for (double& th : theta) th = rng.next_double() * b.delta_max;
    for (double dot : rhs(c, theta, p)) mean_dev += std::abs(dot - Omega);
    mean_dev /= h.node_count();
    CHECK(mean_dev <= tau);
  }
}

TEST_CASE("deviations decay for stable angles and persist past pi/2") {
  Hypergraph h = random_hypergraph(30, 45, 18, 9);
  DegreeProfile d = degrees(h);
  const double Omega = 2.0;
  const double tau = 0.5;

  auto final_deviation = [&](double alpha) {
    KuramotoParams p = tuned_params(h.node_count(), 0.6, 0.8, alpha, alpha);
    p.omega = assign_frequencies(d, Omega, p).omega;
    DeltaBound b = delta_max(d, tau, p);
    SplitMix64 rng(7);
    for (double& th : p.theta0) th = rng.next_double() * b.delta_max;
    Trajectory t = integrate(h, p);
    CouplingStructure c = CouplingStructure::compile(h);
    auto max_dev = [&](const std::vector<double>& row) {
      double m = 0.0;
      for (double dot : rhs(c, row, p)) m = std::max(m, std::abs(dot - Omega));
      return m;
    };
    return std::make_pair(max_dev(t.phases.front()), max_dev(t.phases.back()));
  };

  auto [stable0, stable100] = final_deviation(kPi / 3);
  CHECK(stable100 <= 1e-3);

  auto [unstable0, unstable100] = final_deviation(3 * kPi / 5);
  CHECK(unstable100 > 0.1 * unstable0);
}

TEST_CASE("fibre-coherent initial phases keep fibres coherent") {
  Hypergraph h = random_hypergraph(25, 35, 15, 21);
  Partition fibres = hypergraph_fibres(h).node_partition;
  DegreeProfile d = degrees(h);
  KuramotoParams p = tuned_params(h.node_count());
  const double Omega = 2.0;
  p.omega = assign_frequencies(d, Omega, p).omega;
  DeltaBound b = delta_max(d, 0.5, p);
  SplitMix64 rng(11);
  std::vector<double> class_phase(fibres.class_count());
  for (double& ph : class_phase) ph = rng.next_double() * b.delta_max;
  for (int i = 0; i < h.node_count(); ++i)
    p.theta0[i] = class_phase[fibres.class_of[i]];
  Trajectory t = integrate(h, p);
  for (const auto& row : t.phases)
    for (const auto& cls : fibres.classes)
      for (std::size_t k = 1; k < cls.size(); ++k)
        CHECK(std::abs(row[cls[k]] - row[cls[0]]) <= 1e-9);
}
