#include "hyperfib/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>

#include "hyperfib/error.hpp"
#include "hyperfib/rng.hpp"

namespace hyperfib {

void KuramotoParams::validate(int node_count) const {
  if (dt <= 0.0) throw Error(ErrorCode::InvalidCounts, "dt must be positive");
  if (t_max < dt) throw Error(ErrorCode::InvalidCounts, "t_max must be >= dt");
  if (static_cast<int>(omega.size()) != node_count)
    throw Error(ErrorCode::InvalidCounts, "omega length mismatch");
  if (static_cast<int>(theta0.size()) != node_count)
    throw Error(ErrorCode::InvalidCounts, "theta0 length mismatch");
}

CouplingStructure CouplingStructure::compile(const Hypergraph& h) {
  CouplingStructure c;
  c.pair_partners.resize(h.node_count());
  c.triple_partners.resize(h.node_count());
  for (const auto& e : h.hyperedges()) {
    if (e.size() == 2) {
      c.pair_partners[e[0]].push_back(e[1]);
      c.pair_partners[e[1]].push_back(e[0]);
    } else if (e.size() == 3) {
      // one entry per occurrence; the occurrence itself is excluded
      for (int pos = 0; pos < 3; ++pos) {
        int i = e[pos];
        int j = e[(pos + 1) % 3];
        int k = e[(pos + 2) % 3];
        c.triple_partners[i].emplace_back(j, k);
      }
    }
  }
  return c;
}

std::vector<double> rhs(const CouplingStructure& c, const std::vector<double>& theta,
                        const KuramotoParams& p) {
  const int n = c.node_count();
  std::vector<double> dot(n);
  for (int i = 0; i < n; ++i) {
    double acc = p.omega[i];
    for (int j : c.pair_partners[i])
      acc += p.sigma2 * std::sin(theta[j] - theta[i] - p.alpha2);
    for (auto [j, k] : c.triple_partners[i])
      acc += p.sigma3 * std::sin(theta[j] + theta[k] - 2.0 * theta[i] - p.alpha3);
    dot[i] = acc;
  }
  return dot;
}

namespace {

// Dormand-Prince 5(4) tableau; fixed step uses the 5th-order weights only.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;

std::vector<double> stage_state(const std::vector<double>& y, double dt,
                                std::initializer_list<std::pair<double, const std::vector<double>*>> terms) {
  std::vector<double> out = y;
  for (auto [coeff, k] : terms)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += dt * coeff * (*k)[i];
  return out;
}

}  // namespace

Trajectory integrate(const CouplingStructure& c, const KuramotoParams& p) {
  p.validate(c.node_count());
  const int steps = static_cast<int>(std::llround(p.t_max / p.dt));
  const double dt = p.dt;

  Trajectory t;
  t.times.reserve(steps + 1);
  t.phases.reserve(steps + 1);
  t.times.push_back(0.0);
  t.phases.push_back(p.theta0);

  std::vector<double> y = p.theta0;
  for (int s = 0; s < steps; ++s) {
    auto k1 = rhs(c, y, p);
    auto k2 = rhs(c, stage_state(y, dt, {{kA21, &k1}}), p);
    auto k3 = rhs(c, stage_state(y, dt, {{kA31, &k1}, {kA32, &k2}}), p);
    auto k4 = rhs(c, stage_state(y, dt, {{kA41, &k1}, {kA42, &k2}, {kA43, &k3}}), p);
    auto k5 = rhs(c, stage_state(y, dt, {{kA51, &k1}, {kA52, &k2}, {kA53, &k3}, {kA54, &k4}}), p);
    auto k6 = rhs(c, stage_state(y, dt, {{kA61, &k1}, {kA62, &k2}, {kA63, &k3}, {kA64, &k4}, {kA65, &k5}}), p);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += dt * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] +
                    kB6 * k6[i]);
      if (!std::isfinite(y[i]))
        throw Error(ErrorCode::NonFiniteState,
                    "non-finite phase at step " + std::to_string(s + 1));
    }
    t.times.push_back((s + 1) * dt);
    t.phases.push_back(y);
  }
  return t;
}

Trajectory integrate(const Hypergraph& h, const KuramotoParams& p) {
  return integrate(CouplingStructure::compile(h), p);
}

double global_order_parameter(const std::vector<double>& phases) {
  std::complex<double> sum = 0.0;
  for (double th : phases) sum += std::polar(1.0, th);
  return phases.empty() ? 0.0 : std::abs(sum) / static_cast<double>(phases.size());
}

OrderParameters order_parameters(const std::vector<double>& phases,
                                 const Partition* p) {
  OrderParameters r;
  r.global = global_order_parameter(phases);
  if (p) {
    r.per_class.reserve(p->class_count());
    for (const auto& cls : p->classes) {
      std::complex<double> sum = 0.0;
      for (int i : cls) sum += std::polar(1.0, phases[i]);
      r.per_class.push_back(std::abs(sum) / static_cast<double>(cls.size()));
    }
  }
  return r;
}

namespace {

double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::acos(-1.0)));
}

struct PairLinker {
  std::vector<int> parent;
  explicit PairLinker(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Partition extract_sync_clusters(const Trajectory& t, const DegreeProfile& d,
                                double epsilon, int n_samples, std::uint64_t seed) {
  const int n = t.node_count();
  const int steps = t.step_count();

  SplitMix64 rng(seed);
  std::vector<int> sample_times(n_samples);
  for (int& s : sample_times) s = static_cast<int>(rng.next_below(steps));

  std::map<std::vector<int>, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[d.sequence(i)].push_back(i);

  PairLinker linker(n);
  for (const auto& [_, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        int i = members[a], j = members[b];
        bool aligned = true;
        for (int s : sample_times) {
          if (circular_distance(t.phases[s][i], t.phases[s][j]) >= epsilon) {
            aligned = false;
            break;
          }
        }
        if (!aligned) continue;
        double avg_r = 0.0;
        for (int s = 0; s < steps; ++s) {
          std::complex<double> sum =
              std::polar(1.0, t.phases[s][i]) + std::polar(1.0, t.phases[s][j]);
          avg_r += std::abs(sum) / 2.0;
        }
        avg_r /= steps;
        if (1.0 - avg_r < epsilon) linker.unite(i, j);
      }
    }
  }

  std::vector<int> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = linker.find(i);
  return Partition::from_labels(roots);
}

std::vector<std::vector<double>> sweep_frustration(
    const Hypergraph& h, const std::vector<double>& alpha2_values,
    const std::vector<double>& alpha3_values, const KuramotoParams& base) {
  CouplingStructure c = CouplingStructure::compile(h);
  std::vector<std::vector<double>> matrix(
      alpha2_values.size(), std::vector<double>(alpha3_values.size(), 0.0));
  for (std::size_t a = 0; a < alpha2_values.size(); ++a) {
    for (std::size_t b = 0; b < alpha3_values.size(); ++b) {
      KuramotoParams p = base;
      p.alpha2 = alpha2_values[a];
      p.alpha3 = alpha3_values[b];
      p.t_max = 500.0 * p.dt;
      Trajectory t = integrate(c, p);
      double avg = 0.0;
      for (const auto& row : t.phases) avg += global_order_parameter(row);
      matrix[a][b] = avg / t.step_count();
    }
  }
  return matrix;
}

}  // namespace hyperfib
