#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperfib/dynamics.hpp"
#include "hyperfib/error.hpp"
#include "hyperfib/fibration.hpp"
#include "hyperfib/freqtune.hpp"
#include "hyperfib/hypergraph.hpp"
#include "hyperfib/io.hpp"
#include "hyperfib/topoedit.hpp"

namespace {

using namespace hyperfib;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitNumeric = 4;

Hypergraph load_hypergraph(const std::string& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  HypergraphFormat format =
      (first != std::string::npos && text[first] == '{')
          ? HypergraphFormat::Json
          : HypergraphFormat::HyperedgeList;
  return parse_hypergraph(text, format);
}

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty())
    std::cout << content;
  else
    write_file_atomic(output_path, content);
}

std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stod(token));
  }
  return out;
}

// Per-node vector from a scalar default, optionally overridden by a file
// with one value per line.
std::vector<double> node_vector(int n, double scalar, const std::string& file) {
  if (file.empty()) return std::vector<double>(n, scalar);
  std::vector<double> out;
  std::stringstream ss(read_file(file));
  std::string line;
  while (std::getline(ss, line)) {
    std::size_t pos = line.find('#');
    if (pos != std::string::npos) line.resize(pos);
    std::stringstream ls(line);
    double v;
    if (ls >> v) out.push_back(v);
  }
  if (static_cast<int>(out.size()) != n)
    throw Error(ErrorCode::InvalidCounts,
                "expected " + std::to_string(n) + " values in " + file + ", got " +
                    std::to_string(out.size()));
  return out;
}

struct ParsedTrajectory {
  Trajectory trajectory;
  std::vector<std::string> columns;
};

ParsedTrajectory parse_trajectory_csv(const std::string& text) {
  ParsedTrajectory out;
  std::stringstream ss(text);
  std::string line;
  if (!std::getline(ss, line))
    throw Error(ErrorCode::EmptyInput, "empty trajectory CSV");
  {
    std::stringstream header(line);
    std::string cell;
    bool first = true;
    while (std::getline(header, cell, ',')) {
      if (first) {
        if (cell != "t")
          throw Error(ErrorCode::MalformedLine, "trajectory header must start with t");
        first = false;
      } else {
        out.columns.push_back(cell);
      }
    }
  }
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedLine, "bad number in trajectory CSV: " + cell);
      }
    }
    if (values.size() != out.columns.size() + 1)
      throw Error(ErrorCode::MalformedLine, "trajectory row width mismatch");
    out.trajectory.times.push_back(values.front());
    out.trajectory.phases.emplace_back(values.begin() + 1, values.end());
  }
  if (out.trajectory.times.empty())
    throw Error(ErrorCode::EmptyInput, "trajectory CSV has no rows");
  return out;
}

std::string stats_json(const Partition& p) {
  PartitionStats s = fibre_stats(p);
  nlohmann::json out;
  out["class_count"] = s.class_count;
  out["avg_class_size"] = s.avg_class_size;
  out["nontrivial_count"] = s.nontrivial_count;
  return out.dump(2) + "\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{"hypergraph fibration symmetry toolkit"};
  app.require_subcommand(1);

  std::string input, output, format_hint;
  double sigma2 = 0.0, sigma3 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
  double dt = 0.1, tmax = 100.0, tau = 0.5, omega_target = 0.0;
  double epsilon = 1e-6, omega_scalar = 0.0, theta0_scalar = 0.0;
  int samples = 10, K = 0, T = 100, n_orders = 10, max_iter = 50, retry_limit = 3;
  std::uint64_t seed = 0;
  std::string omega_file, theta0_file, order_output, target_file, result_output;
  std::string mode = "simple", alpha2_list, alpha3_list;
  bool dedup = false, largest = false, drop_singletons = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input hypergraph file")->required();
    cmd->add_option("-o,--output", output, "output path (default: stdout)");
  };
  auto add_dynamics = [&](CLI::App* cmd) {
    cmd->add_option("--sigma2", sigma2, "pairwise coupling strength");
    cmd->add_option("--sigma3", sigma3, "triple coupling strength");
    cmd->add_option("--alpha2", alpha2, "pairwise frustration (rad)");
    cmd->add_option("--alpha3", alpha3, "triple frustration (rad)");
    cmd->add_option("--dt", dt, "integration step");
    cmd->add_option("--tmax", tmax, "integration horizon");
  };

  auto* fibres = app.add_subcommand("fibres", "minimal balanced coloring");
  add_common(fibres);
  std::string fibres_stats_output;
  fibres->add_option("--stats-output", fibres_stats_output,
                     "write fibre statistics JSON here (default: stderr)");

  auto* project_cmd = app.add_subcommand("project", "clique expansion");
  add_common(project_cmd);
  project_cmd->add_option("--mode", mode, "simple | multi")
      ->check(CLI::IsMember({"simple", "multi"}));

  auto* simulate = app.add_subcommand("simulate", "integrate the dynamics");
  add_common(simulate);
  add_dynamics(simulate);
  simulate->add_option("--omega", omega_scalar, "uniform natural frequency");
  simulate->add_option("--omega-file", omega_file, "per-node frequencies, one per line");
  simulate->add_option("--theta0", theta0_scalar, "uniform initial phase");
  simulate->add_option("--theta0-file", theta0_file, "per-node initial phases");
  simulate->add_option("--order-output", order_output,
                       "order-parameter CSV (global + per fibre)");

  auto* sync = app.add_subcommand("sync-clusters", "clusters from a trajectory");
  sync->add_option("input", input, "input hypergraph file")->required();
  std::string trajectory_file;
  sync->add_option("--trajectory", trajectory_file, "trajectory CSV")->required();
  sync->add_option("-o,--output", output, "output path (default: stdout)");
  sync->add_option("--epsilon", epsilon, "coherence tolerance");
  sync->add_option("--samples", samples, "random sample times");
  sync->add_option("--seed", seed, "RNG seed");

  auto* sweep = app.add_subcommand("sweep", "frustration-plane heatmap");
  add_common(sweep);
  add_dynamics(sweep);
  sweep->add_option("--theta0", theta0_scalar, "uniform initial phase");
  sweep->add_option("--omega", omega_scalar, "uniform natural frequency");
  sweep->add_option("--alpha2-values", alpha2_list, "comma-separated alpha2 grid")
      ->required();
  sweep->add_option("--alpha3-values", alpha3_list, "comma-separated alpha3 grid")
      ->required();

  auto add_edit = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--result-output", result_output,
                    "write the resulting hyperedge list here");
  };
  auto* sparsify_cmd = app.add_subcommand("sparsify", "fibre-preserving sparsification");
  add_edit(sparsify_cmd);
  sparsify_cmd->add_option("--n-orders", n_orders, "removal orders to try");

  auto* retarget_cmd = app.add_subcommand("retarget", "edit toward a target partition");
  add_edit(retarget_cmd);
  retarget_cmd->add_option("--target", target_file, "target partition JSON")->required();
  retarget_cmd->add_option("--max-iter", max_iter, "iteration cap");
  retarget_cmd->add_option("--n-orders", n_orders, "removal orders in the final prune");

  auto* inject_cmd = app.add_subcommand("inject", "redundancy injection");
  add_edit(inject_cmd);
  inject_cmd->add_option("-K,--count", K, "hyperedges to add");
  inject_cmd->add_option("-T,--trials", T, "trial cap");
  inject_cmd->add_option("--retry-limit", retry_limit, "per-batch retries");

  auto* tune = app.add_subcommand("tune-freq", "frequency assignment + spread bound");
  add_common(tune);
  add_dynamics(tune);
  tune->add_option("--tau", tau, "frequency-deviation tolerance");
  tune->add_option("--omega-target", omega_target, "common target frequency");
  std::string bound_output;
  tune->add_option("--bound-output", bound_output,
                   "write the spread-bound JSON here (default: stderr)");

  auto* stats = app.add_subcommand("stats", "summary row for a dataset");
  add_common(stats);
  stats->add_flag("--dedup", dedup, "drop duplicate hyperedges");
  stats->add_flag("--largest-component", largest, "keep only the largest component");
  stats->add_flag("--drop-singletons", drop_singletons, "drop order-1 hyperedges");

  CLI11_PARSE(app, argc, argv);

  if (fibres->parsed()) {
    Hypergraph h = load_hypergraph(input);
    FibrationResult fr = hypergraph_fibres(h);
    emit(output, partition_to_json(fr.node_partition, h));
    std::string st = stats_json(fr.node_partition);
    if (fibres_stats_output.empty())
      std::cerr << st;
    else
      write_file_atomic(fibres_stats_output, st);
  } else if (project_cmd->parsed()) {
    Hypergraph h = load_hypergraph(input);
    Hypergraph p = project(
        h, mode == "multi" ? ProjectionMode::Multi : ProjectionMode::Simple);
    emit(output, write_hyperedge_list(p));
  } else if (simulate->parsed()) {
    Hypergraph h = load_hypergraph(input);
    KuramotoParams p;
    p.sigma2 = sigma2; p.sigma3 = sigma3; p.alpha2 = alpha2; p.alpha3 = alpha3;
    p.dt = dt; p.t_max = tmax;
    p.omega = node_vector(h.node_count(), omega_scalar, omega_file);
    p.theta0 = node_vector(h.node_count(), theta0_scalar, theta0_file);
    Trajectory t = integrate(h, p);
    std::vector<std::string> columns;
    for (int i = 0; i < h.node_count(); ++i) columns.push_back(h.label(i));
    emit(output, trajectory_to_csv(t.times, t.phases, columns));
    if (!order_output.empty()) {
      Partition fibres_p = hypergraph_fibres(h).node_partition;
      std::vector<std::string> rcols = {"R"};
      for (int c = 0; c < fibres_p.class_count(); ++c)
        rcols.push_back("R_" + std::to_string(c));
      std::vector<std::vector<double>> rows;
      for (const auto& row : t.phases) {
        OrderParameters op = order_parameters(row, &fibres_p);
        std::vector<double> out_row = {op.global};
        out_row.insert(out_row.end(), op.per_class.begin(), op.per_class.end());
        rows.push_back(std::move(out_row));
      }
      write_file_atomic(order_output, trajectory_to_csv(t.times, rows, rcols));
    }
  } else if (sync->parsed()) {
    Hypergraph h = load_hypergraph(input);
    ParsedTrajectory pt = parse_trajectory_csv(read_file(trajectory_file));
    if (static_cast<int>(pt.columns.size()) != h.node_count())
      throw Error(ErrorCode::InvalidCounts, "trajectory columns do not match node count");
    // reorder columns to node index order by label
    std::vector<int> col_of(h.node_count(), -1);
    for (int i = 0; i < h.node_count(); ++i) {
      for (std::size_t c = 0; c < pt.columns.size(); ++c)
        if (pt.columns[c] == h.label(i)) { col_of[i] = static_cast<int>(c); break; }
      if (col_of[i] < 0)
        throw Error(ErrorCode::MalformedLine, "trajectory missing node " + h.label(i));
    }
    Trajectory t;
    t.times = pt.trajectory.times;
    for (const auto& row : pt.trajectory.phases) {
      std::vector<double> ordered(h.node_count());
      for (int i = 0; i < h.node_count(); ++i) ordered[i] = row[col_of[i]];
      t.phases.push_back(std::move(ordered));
    }
    Partition p = extract_sync_clusters(t, degrees(h), epsilon, samples, seed);
    emit(output, partition_to_json(p, h));
  } else if (sweep->parsed()) {
    Hypergraph h = load_hypergraph(input);
    KuramotoParams p;
    p.sigma2 = sigma2; p.sigma3 = sigma3; p.dt = dt;
    p.omega.assign(h.node_count(), omega_scalar);
    p.theta0.assign(h.node_count(), theta0_scalar);
    std::vector<double> a2 = parse_value_list(alpha2_list);
    std::vector<double> a3 = parse_value_list(alpha3_list);
    auto matrix = sweep_frustration(h, a2, a3, p);
    emit(output, sweep_to_csv(a2, a3, matrix));
  } else if (sparsify_cmd->parsed() || retarget_cmd->parsed() || inject_cmd->parsed()) {
    Hypergraph h = load_hypergraph(input);
    EditConfig cfg;
    cfg.seed = seed; cfg.n_orders = n_orders; cfg.max_iter = max_iter;
    cfg.K = K; cfg.T = T; cfg.retry_limit = retry_limit;
    EditReport report;
    if (sparsify_cmd->parsed()) {
      report = hyperfib::sparsify(h, cfg);
    } else if (retarget_cmd->parsed()) {
      Partition target = partition_from_json(read_file(target_file), h);
      report = hyperfib::retarget(h, target, cfg);
    } else {
      report = inject_redundancy(h, K, cfg);
    }
    emit(output, edit_report_to_json(report, h));
    if (!result_output.empty())
      write_file_atomic(result_output, write_hyperedge_list(report.result));
    if (retarget_cmd->parsed() && !report.converged) return kExitNoConvergence;
  } else if (tune->parsed()) {
    Hypergraph h = load_hypergraph(input);
    KuramotoParams p;
    p.sigma2 = sigma2; p.sigma3 = sigma3; p.alpha2 = alpha2; p.alpha3 = alpha3;
    DegreeProfile d = degrees(h);
    FrequencyAssignment fa = assign_frequencies(d, omega_target, p);
    std::ostringstream csv;
    csv << "label,omega\n";
    for (int i = 0; i < h.node_count(); ++i)
      csv << h.label(i) << ',' << format_double(fa.omega[i]) << '\n';
    emit(output, csv.str());
    DeltaBound b = delta_max(d, tau, p);
    StabilityMargin m = stability_margin(alpha2, alpha3);
    nlohmann::json bj;
    bj["tau"] = b.tau;
    bj["delta_max"] = b.delta_max;
    bj["kappa_max"] = b.kappa.empty() ? 0.0
                                      : *std::max_element(b.kappa.begin(), b.kappa.end());
    bj["stable"] = m.stable;
    std::string bound = bj.dump(2) + "\n";
    if (bound_output.empty())
      std::cerr << bound;
    else
      write_file_atomic(bound_output, bound);
  } else if (stats->parsed()) {
    Hypergraph h = load_hypergraph(input);
    if (drop_singletons) h = drop_singleton_hyperedges(h);
    if (dedup) h = dedup_hyperedges(h);
    if (largest) h = largest_component(h).hypergraph;
    Partition p = hypergraph_fibres(h).node_partition;
    PartitionStats s = fibre_stats(p);
    std::ostringstream row;
    row << h.node_count() << ',' << h.edge_count() << ','
        << format_double(s.avg_class_size) << ',' << s.nontrivial_count << '\n';
    emit(output, row.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const Error& e) {
    nlohmann::json err;
    err["error"]["code"] = to_string(e.code());
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return e.code() == ErrorCode::NonFiniteState ? kExitNumeric : kExitInput;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"]["code"] = "Internal";
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << '\n';
    return kExitInput;
  }
}
