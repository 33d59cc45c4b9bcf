#ifndef HYPERFIB_HYPERGRAPH_HPP
#define HYPERFIB_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperfib/partition.hpp"

namespace hyperfib {

// Undirected hypergraph. Hyperedges are multisets of node indices, stored
// sorted; a node may appear more than once in one hyperedge, and the order
// of a hyperedge counts those repetitions (|{a,a,b}| = 3).
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int node_count, std::vector<std::vector<int>> hyperedges,
             std::vector<std::string> labels = {});

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& hyperedges() const { return edges_; }
  const std::vector<int>& hyperedge(int e) const { return edges_[e]; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label of node i, or its decimal index when the hypergraph is unlabeled.
  std::string label(int i) const;

  int rank() const;
  int order(int e) const { return static_cast<int>(edges_[e].size()); }

  bool operator==(const Hypergraph&) const = default;

 private:
  int node_count_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::string> labels_;
};

// Two-layer multigraph view of a hypergraph: left layer nodes, right layer
// hyperedges, multiplicities counting repeated membership.
struct IncidenceBipartite {
  int left_count = 0;
  int right_count = 0;
  // adjacency[v] for v in [0, left_count + right_count); node v's neighbors
  // as (vertex id, multiplicity), with hyperedge vertex e at id left_count+e.
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  int vertex_count() const { return left_count + right_count; }
  bool is_edge_vertex(int v) const { return v >= left_count; }
};

// Per-node hyperedge counts by order, weighted by membership multiplicity.
struct DegreeProfile {
  int node_count = 0;
  int rank = 0;
  std::vector<int> counts;  // node-major, (rank+1) entries per node

  int k(int node, int order) const { return counts[node * (rank + 1) + order]; }
  // Full degree sequence of one node, used as an exact grouping key.
  std::vector<int> sequence(int node) const {
    return {counts.begin() + node * (rank + 1),
            counts.begin() + (node + 1) * (rank + 1)};
  }
};

enum class HypergraphFormat { HyperedgeList, Json };
enum class ProjectionMode { Simple, Multi };

struct ConnectivityResult {
  bool is_connected = false;
  Partition components;
};

struct ComponentExtraction {
  Hypergraph hypergraph;
  std::vector<int> old_to_new;  // -1 for nodes outside the kept component
};

Hypergraph parse_hypergraph(const std::string& text, HypergraphFormat format);
std::string write_hyperedge_list(const Hypergraph& h);
std::string write_json(const Hypergraph& h);

IncidenceBipartite incidence(const Hypergraph& h);
// Rebuild a hypergraph from its incidence representation.
Hypergraph from_incidence(const IncidenceBipartite& b,
                          std::vector<std::string> labels = {});

// Clique expansion. Multi keeps one pair per co-occurrence (self-pairs from
// repeated members included); Simple dedups to multiplicity one and drops
// self-pairs.
Hypergraph project(const Hypergraph& h, ProjectionMode mode);

DegreeProfile degrees(const Hypergraph& h);

ConnectivityResult connectivity(const Hypergraph& h);
ComponentExtraction largest_component(const Hypergraph& h);

// Drops order-1 hyperedges; node set unchanged.
Hypergraph drop_singleton_hyperedges(const Hypergraph& h);
// Keeps the first occurrence of each repeated hyperedge.
Hypergraph dedup_hyperedges(const Hypergraph& h);

// Samples m2 distinct pairs and m3 distinct triples uniformly without
// replacement, then keeps the largest connected component.
Hypergraph random_hypergraph(int n, int m2, int m3, std::uint64_t seed);

}  // namespace hyperfib

#endif
