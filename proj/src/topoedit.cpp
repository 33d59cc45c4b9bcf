#include "hyperfib/topoedit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hyperfib/error.hpp"
#include "hyperfib/fibration.hpp"
#include "hyperfib/rng.hpp"

namespace hyperfib {

namespace {

Hypergraph with_edges(const Hypergraph& h, std::vector<std::vector<int>> edges) {
  return Hypergraph(h.node_count(), std::move(edges), h.labels());
}

bool preserves(const Hypergraph& candidate, const Partition& target) {
  if (!connectivity(candidate).is_connected) return false;
  return hypergraph_fibres(candidate).node_partition == target;
}

// One greedy pass: drop whole color groups in the given order whenever the
// remainder stays connected and keeps the target node partition.
std::vector<int> greedy_pass(const Hypergraph& h, const Partition& node_target,
                             const std::vector<std::vector<int>>& groups,
                             const std::vector<int>& group_order,
                             const std::set<int>& protected_edges) {
  std::vector<bool> alive(h.edge_count(), true);
  auto survivors = [&] {
    std::vector<int> s;
    for (int e = 0; e < h.edge_count(); ++e)
      if (alive[e]) s.push_back(e);
    return s;
  };
  for (int g : group_order) {
    bool touches_protected = false;
    for (int e : groups[g])
      if (protected_edges.count(e)) {
        touches_protected = true;
        break;
      }
    if (touches_protected) continue;

    for (int e : groups[g]) alive[e] = false;
    std::vector<std::vector<int>> kept;
    for (int e : survivors()) kept.push_back(h.hyperedge(e));
    if (!preserves(with_edges(h, std::move(kept)), node_target)) {
      for (int e : groups[g]) alive[e] = true;  // roll back
    }
  }
  return survivors();
}

EditReport sparsify_toward(const Hypergraph& h, const Partition& node_target,
                           const std::vector<std::vector<int>>& groups,
                           const EditConfig& cfg) {
  std::vector<int> best;
  bool have_best = false;
  for (int run = 0; run < cfg.n_orders; ++run) {
    std::vector<int> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng = SplitMix64::derive(cfg.seed, run);
    rng.shuffle(order);
    std::vector<int> survivors =
        greedy_pass(h, node_target, groups, order, cfg.protected_edges);
    if (!have_best || survivors.size() < best.size() ||
        (survivors.size() == best.size() && survivors < best)) {
      best = std::move(survivors);
      have_best = true;
    }
  }

  EditReport report;
  report.iterations = cfg.n_orders;
  std::vector<bool> kept(h.edge_count(), false);
  for (int e : best) kept[e] = true;
  std::vector<std::vector<int>> edges;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (kept[e])
      edges.push_back(h.hyperedge(e));
    else
      report.removed.push_back(h.hyperedge(e));
  }
  report.result = with_edges(h, std::move(edges));
  return report;
}

}  // namespace

EditReport sparsify(const Hypergraph& h, const EditConfig& cfg) {
  if (!connectivity(h).is_connected)
    throw Error(ErrorCode::Disconnected, "sparsify requires a connected hypergraph");
  FibrationResult fr = hypergraph_fibres(h);
  return sparsify_toward(h, fr.node_partition, fr.hyperedge_partition.classes, cfg);
}

namespace {

// Count map per node: (order, sorted co-member classes of the target
// partition) -> number of incidences, own occurrence excluded.
using ClassSignature = std::map<std::pair<int, std::vector<int>>, int>;

ClassSignature class_signature(const std::vector<std::vector<int>>& edges,
                               const Partition& target, int node) {
  ClassSignature sig;
  for (const auto& e : edges) {
    int occurrences = static_cast<int>(std::count(e.begin(), e.end(), node));
    if (occurrences == 0) continue;
    std::vector<int> co;
    bool skipped = false;
    for (int j : e) {
      if (j == node && !skipped) {
        skipped = true;
        continue;
      }
      co.push_back(target.class_of[j]);
    }
    std::sort(co.begin(), co.end());
    sig[{static_cast<int>(e.size()), std::move(co)}] += occurrences;
  }
  return sig;
}

int class_representative(const Partition& target, int cls, int avoid) {
  for (int i : target.classes[cls])
    if (i != avoid) return i;
  return target.classes[cls].front();
}

// Split a computed fibre straddling several target classes: take its
// smallest intersection with a target class and attach each of those nodes
// to an anchor in the smallest target class disjoint from the fibre.
void split_step(std::vector<std::vector<int>>& edges, const Partition& current,
                const Partition& target) {
  for (const auto& fibre : current.classes) {
    std::map<int, std::vector<int>> by_target;
    for (int i : fibre) by_target[target.class_of[i]].push_back(i);
    if (by_target.size() < 2) continue;

    const std::vector<int>* chosen = nullptr;
    for (const auto& [_, members] : by_target) {
      if (!chosen || members.size() < chosen->size() ||
          (members.size() == chosen->size() &&
           members.front() < chosen->front()))
        chosen = &members;
    }

    int anchor = -1;
    std::size_t anchor_size = 0;
    std::set<int> fibre_targets;
    for (int i : fibre) fibre_targets.insert(target.class_of[i]);
    for (int c = 0; c < target.class_count(); ++c) {
      if (fibre_targets.count(c)) continue;
      std::size_t size = target.classes[c].size();
      if (anchor < 0 || size < anchor_size) {
        anchor = target.classes[c].front();
        anchor_size = size;
      }
    }
    if (anchor < 0) continue;  // no disjoint target class to lean on

    for (int u : *chosen) {
      std::vector<int> e = {u, anchor};
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
  }
}

// Merge a target class spread over computed fibres: equalize every member's
// incidence profile up to the component-wise maximum signature.
void merge_step(std::vector<std::vector<int>>& edges, const Partition& current,
                const Partition& target) {
  std::vector<std::vector<int>> additions;
  for (const auto& cls : target.classes) {
    std::set<int> computed;
    for (int i : cls) computed.insert(current.class_of[i]);
    if (computed.size() < 2) continue;

    std::vector<ClassSignature> sigs;
    sigs.reserve(cls.size());
    for (int i : cls) sigs.push_back(class_signature(edges, target, i));
    ClassSignature maximum;
    for (const auto& sig : sigs)
      for (const auto& [key, count] : sig)
        maximum[key] = std::max(maximum[key], count);

    for (std::size_t k = 0; k < cls.size(); ++k) {
      int u = cls[k];
      for (const auto& [key, want] : maximum) {
        auto it = sigs[k].find(key);
        int have = it == sigs[k].end() ? 0 : it->second;
        for (int rep = have; rep < want; ++rep) {
          std::vector<int> e = {u};
          for (int c : key.second) e.push_back(class_representative(target, c, u));
          std::sort(e.begin(), e.end());
          additions.push_back(std::move(e));
        }
      }
    }
  }
  for (auto& e : additions) edges.push_back(std::move(e));
}

}  // namespace

EditReport retarget(const Hypergraph& h, const Partition& target,
                    const EditConfig& cfg) {
  const int original_count = h.edge_count();
  std::vector<std::vector<int>> edges = h.hyperedges();

  EditReport report;
  report.converged = false;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    Hypergraph current = with_edges(h, edges);
    Partition p = hypergraph_fibres(current).node_partition;
    report.iterations = iter;
    if (p == target) {
      // prune additions only; original hyperedges stay untouchable
      EditConfig prune_cfg = cfg;
      prune_cfg.protected_edges.clear();
      for (int e = 0; e < original_count; ++e) prune_cfg.protected_edges.insert(e);
      if (connectivity(current).is_connected) {
        FibrationResult fr = hypergraph_fibres(current);
        EditReport pruned = sparsify_toward(current, fr.node_partition,
                                            fr.hyperedge_partition.classes,
                                            prune_cfg);
        current = pruned.result;
      }
      report.converged = true;
      report.result = current;
      for (int e = original_count; e < current.edge_count(); ++e)
        report.added.push_back(current.hyperedge(e));
      return report;
    }
    split_step(edges, p, target);
    merge_step(edges, p, target);
  }

  report.result = with_edges(h, edges);
  for (int e = original_count; e < report.result.edge_count(); ++e)
    report.added.push_back(report.result.hyperedge(e));
  return report;
}

EditReport inject_redundancy(const Hypergraph& h, int k, const EditConfig& cfg) {
  EditReport report;
  report.result = h;
  const Partition fibres = hypergraph_fibres(h).node_partition;
  const int rank = h.rank();
  if (k <= 0 || rank < 2) return report;

  SplitMix64 rng(cfg.seed);
  std::vector<int> order_sequence;
  auto refill_orders = [&] {
    order_sequence.clear();
    for (int r = 2; r <= rank; ++r) order_sequence.push_back(r);
    rng.shuffle(order_sequence);
  };
  refill_orders();
  std::size_t order_index = 0;

  std::vector<std::vector<int>> edges = h.hyperedges();
  std::set<std::vector<int>> existing(edges.begin(), edges.end());
  int added = 0;
  int trials = 0;

  while (added < k && trials < cfg.T) {
    ++trials;
    if (order_index == order_sequence.size()) {
      refill_orders();
      order_index = 0;
    }
    int r = order_sequence[order_index++];
    if (fibres.class_count() < r) continue;

    // r distinct classes via partial shuffle
    std::vector<int> class_ids(fibres.class_count());
    std::iota(class_ids.begin(), class_ids.end(), 0);
    for (int pick = 0; pick < r; ++pick) {
      std::size_t j = pick + rng.next_below(class_ids.size() - pick);
      std::swap(class_ids[pick], class_ids[j]);
    }
    class_ids.resize(r);

    for (int attempt = 0; attempt < cfg.retry_limit; ++attempt) {
      long long lcm = 1;
      for (int c : class_ids)
        lcm = std::lcm(lcm, static_cast<long long>(fibres.classes[c].size()));

      std::vector<std::vector<int>> rotations;
      for (int c : class_ids) {
        std::vector<int> members = fibres.classes[c];
        rng.shuffle(members);
        rotations.push_back(std::move(members));
      }
      std::vector<std::vector<int>> batch;
      bool duplicate = false;
      for (long long pos = 0; pos < lcm; ++pos) {
        std::vector<int> e;
        e.reserve(r);
        for (const auto& members : rotations)
          e.push_back(members[pos % members.size()]);
        std::sort(e.begin(), e.end());
        if (existing.count(e)) {
          duplicate = true;
          break;
        }
        batch.push_back(std::move(e));
      }
      if (duplicate) continue;

      std::vector<std::vector<int>> candidate = edges;
      candidate.insert(candidate.end(), batch.begin(), batch.end());
      if (hypergraph_fibres(with_edges(h, candidate)).node_partition != fibres)
        continue;

      edges = std::move(candidate);
      for (auto& e : batch) {
        existing.insert(e);
        report.added.push_back(std::move(e));
      }
      added += static_cast<int>(lcm);
      break;
    }
  }

  report.iterations = trials;
  report.converged = added >= k;
  report.result = with_edges(h, std::move(edges));
  return report;
}

}  // namespace hyperfib
