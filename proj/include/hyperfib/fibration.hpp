#ifndef HYPERFIB_FIBRATION_HPP
#define HYPERFIB_FIBRATION_HPP

#include <map>
#include <string>
#include <vector>

#include "hyperfib/hypergraph.hpp"
#include "hyperfib/partition.hpp"

namespace hyperfib {

struct FibrationResult {
  Partition node_partition;
  Partition hyperedge_partition;
  int round_count = 0;
};

// Coarsest refinement of init_colors on the bipartite graph such that any
// two same-class vertices have identical multisets of neighbor classes
// (neighbors counted with incidence multiplicity).
Partition refine(const IncidenceBipartite& b, const std::vector<int>& init_colors,
                 int* round_count = nullptr);

// Fibres of a hypergraph: refine the incidence bipartite graph seeded with
// layer colors (nodes 0, hyperedges 1) and split the result per layer.
FibrationResult hypergraph_fibres(const Hypergraph& h);

struct BalanceWitness {
  int node_a = -1;
  int node_b = -1;
  std::string detail;
};

struct BalanceResult {
  bool balanced = true;
  BalanceWitness witness;
};

// Node-centric balance check: for every class and every order, all members
// must share identical counts of hyperedges per multiset of co-member
// classes (the node's own occurrence excluded from each hyperedge).
BalanceResult is_balanced(const Hypergraph& h, const Partition& p);

struct QuotientIncidence {
  int node_class_count = 0;
  int edge_class_count = 0;
  // edge_to_node[ec][nc]: members of node-class nc inside a representative
  // hyperedge of edge-class ec, with multiplicity.
  std::vector<std::vector<int>> edge_to_node;
  // node_to_edge[nc][ec]: incidences from a representative node of nc into
  // hyperedges of edge-class ec.
  std::vector<std::vector<int>> node_to_edge;
  Partition node_partition;
  Partition hyperedge_partition;

  bool operator==(const QuotientIncidence&) const = default;
};

// Collapses each class to a supernode, reading multiplicities off the
// least-index representative. Throws UnbalancedPartition when check_balance
// is set and the partition is not balanced.
QuotientIncidence quotient(const Hypergraph& h, const Partition& p,
                           bool check_balance = true);

}  // namespace hyperfib

#endif
