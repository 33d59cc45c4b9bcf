#include "hyperfib/fibration.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hyperfib/error.hpp"

namespace hyperfib {

Partition refine(const IncidenceBipartite& b, const std::vector<int>& init_colors,
                 int* round_count) {
  const int n = b.vertex_count();
  Partition current = Partition::from_labels(init_colors);
  int rounds = 0;

  for (;;) {
    // Signature per vertex: own class plus the sorted multiset of
    // (neighbor class, multiplicity-weighted count).
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Signature> signatures(n);
    std::vector<int> bucket(n, 0);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> counts;
      for (auto [u, mult] : b.adjacency[v]) bucket[current.class_of[u]] += mult;
      for (auto [u, mult] : b.adjacency[v]) {
        int c = current.class_of[u];
        if (bucket[c] != 0) {
          counts.emplace_back(c, bucket[c]);
          bucket[c] = 0;
        }
      }
      std::sort(counts.begin(), counts.end());
      signatures[v] = {current.class_of[v], std::move(counts)};
    }

    std::map<Signature, int> class_of_signature;
    std::vector<int> next_labels(n);
    for (int v = 0; v < n; ++v) {
      auto [it, inserted] = class_of_signature.try_emplace(
          signatures[v], static_cast<int>(class_of_signature.size()));
      next_labels[v] = it->second;
    }
    Partition next = Partition::from_labels(next_labels);
    ++rounds;
    if (next.class_count() == current.class_count()) {
      current = std::move(next);
      break;
    }
    current = std::move(next);
  }
  if (round_count) *round_count = rounds;
  return current;
}

FibrationResult hypergraph_fibres(const Hypergraph& h) {
  IncidenceBipartite b = incidence(h);
  std::vector<int> init(b.vertex_count(), 0);
  for (int e = 0; e < b.right_count; ++e) init[b.left_count + e] = 1;

  FibrationResult r;
  Partition whole = refine(b, init, &r.round_count);
  r.node_partition = whole.prefix(b.left_count);
  r.hyperedge_partition = whole.suffix(b.left_count);
  return r;
}

namespace {

// Per-node count of incident hyperedges keyed by (order, sorted co-member
// classes); one entry per occurrence of the node, that occurrence excluded.
using NodeSignature = std::map<std::pair<int, std::vector<int>>, int>;

NodeSignature node_signature(const Hypergraph& h, const Partition& p, int node) {
  NodeSignature sig;
  for (const auto& e : h.hyperedges()) {
    int occurrences = static_cast<int>(std::count(e.begin(), e.end(), node));
    if (occurrences == 0) continue;
    std::vector<int> co_classes;
    co_classes.reserve(e.size() - 1);
    bool skipped_self = false;
    for (int j : e) {
      if (j == node && !skipped_self) {
        skipped_self = true;
        continue;
      }
      co_classes.push_back(p.class_of[j]);
    }
    std::sort(co_classes.begin(), co_classes.end());
    sig[{static_cast<int>(e.size()), std::move(co_classes)}] += occurrences;
  }
  return sig;
}

std::string describe(const NodeSignature& sig) {
  std::ostringstream out;
  for (const auto& [key, count] : sig) {
    out << "(m=" << key.first << ", classes=[";
    for (std::size_t i = 0; i < key.second.size(); ++i) {
      if (i) out << ' ';
      out << key.second[i];
    }
    out << "]) x" << count << "; ";
  }
  return out.str();
}

}  // namespace

BalanceResult is_balanced(const Hypergraph& h, const Partition& p) {
  BalanceResult r;
  for (const auto& cls : p.classes) {
    if (cls.size() < 2) continue;
    NodeSignature reference = node_signature(h, p, cls.front());
    for (std::size_t k = 1; k < cls.size(); ++k) {
      NodeSignature sig = node_signature(h, p, cls[k]);
      if (sig != reference) {
        r.balanced = false;
        r.witness.node_a = cls.front();
        r.witness.node_b = cls[k];
        r.witness.detail = "node " + std::to_string(cls.front()) + ": " +
                           describe(reference) + "vs node " +
                           std::to_string(cls[k]) + ": " + describe(sig);
        return r;
      }
    }
  }
  return r;
}

QuotientIncidence quotient(const Hypergraph& h, const Partition& p,
                           bool check_balance) {
  if (check_balance) {
    BalanceResult b = is_balanced(h, p);
    if (!b.balanced)
      throw Error(ErrorCode::UnbalancedPartition,
                  "partition not balanced: " + b.witness.detail);
  }

  // Hyperedge classes: group by the multiset of member node classes.
  std::vector<int> edge_key_labels(h.edge_count());
  std::map<std::vector<int>, int> edge_keys;
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<int> key;
    key.reserve(h.hyperedge(e).size());
    for (int i : h.hyperedge(e)) key.push_back(p.class_of[i]);
    std::sort(key.begin(), key.end());
    auto [it, inserted] =
        edge_keys.try_emplace(std::move(key), static_cast<int>(edge_keys.size()));
    edge_key_labels[e] = it->second;
  }

  QuotientIncidence q;
  q.node_partition = p;
  q.hyperedge_partition = Partition::from_labels(edge_key_labels);
  q.node_class_count = p.class_count();
  q.edge_class_count = q.hyperedge_partition.class_count();

  q.edge_to_node.assign(q.edge_class_count,
                        std::vector<int>(q.node_class_count, 0));
  for (int ec = 0; ec < q.edge_class_count; ++ec) {
    int rep = q.hyperedge_partition.classes[ec].front();
    for (int i : h.hyperedge(rep)) ++q.edge_to_node[ec][p.class_of[i]];
  }

  q.node_to_edge.assign(q.node_class_count,
                        std::vector<int>(q.edge_class_count, 0));
  for (int nc = 0; nc < q.node_class_count; ++nc) {
    int rep = p.classes[nc].front();
    for (int e = 0; e < h.edge_count(); ++e) {
      const auto& members = h.hyperedge(e);
      int mult = static_cast<int>(std::count(members.begin(), members.end(), rep));
      q.node_to_edge[nc][q.hyperedge_partition.class_of[e]] += mult;
    }
  }
  return q;
}

}  // namespace hyperfib
