#ifndef HYPERFIB_TOPOEDIT_HPP
#define HYPERFIB_TOPOEDIT_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "hyperfib/hypergraph.hpp"
#include "hyperfib/partition.hpp"

namespace hyperfib {

struct EditConfig {
  std::uint64_t seed = 0;
  int n_orders = 10;             // random color-group removal orders to try
  std::set<int> protected_edges; // hyperedge indices that must survive
  int max_iter = 50;             // retarget iteration cap
  int K = 0;                     // injection target count
  int T = 100;                   // injection trial cap
  int retry_limit = 3;           // per-batch retries
};

struct EditReport {
  Hypergraph result;
  std::vector<std::vector<int>> added;
  std::vector<std::vector<int>> removed;
  bool converged = true;
  int iterations = 0;
};

// Greedy fibre- and connectivity-preserving removal of whole hyperedge
// color groups; best of n_orders random group orders wins (fewest
// survivors, ties by lexicographically smallest survivor set).
EditReport sparsify(const Hypergraph& h, const EditConfig& cfg);

// Iterative split/merge edits toward a target fibre partition, followed by
// a sparsification pass that never removes original hyperedges. May not
// converge; reported via the flag, never thrown.
EditReport retarget(const Hypergraph& h, const Partition& target,
                    const EditConfig& cfg);

// Adds up to K redundant hyperedges in lcm-sized batches that connect
// distinct fibres position-wise, committing a batch only when the fibre
// partition is unchanged.
EditReport inject_redundancy(const Hypergraph& h, int k, const EditConfig& cfg);

}  // namespace hyperfib

#endif
