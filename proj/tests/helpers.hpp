#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <set>
#include <string>
#include <vector>

#include "hyperfib/hypergraph.hpp"
#include "hyperfib/partition.hpp"

namespace testutil {

// 10-node, 9-hyperedge example used across the golden tests.
inline hyperfib::Hypergraph example10() {
  return hyperfib::parse_hypergraph(
      "1 2 0\n7 8 9\n0 6\n3 4\n3 5\n4 5\n6 3\n8 9\n6 7\n",
      hyperfib::HypergraphFormat::HyperedgeList);
}

// Four-node editing examples (nodes A..D).
inline hyperfib::Hypergraph edit_case_sparsify() {
  return hyperfib::parse_hypergraph("A B C\nA C\nC B\nD A\nD B\n",
                                    hyperfib::HypergraphFormat::HyperedgeList);
}

inline hyperfib::Hypergraph edit_case_inject() {
  return hyperfib::parse_hypergraph("A B C\nD A\nD B\n",
                                    hyperfib::HypergraphFormat::HyperedgeList);
}

inline hyperfib::Hypergraph edit_case_retarget() {
  return hyperfib::parse_hypergraph("A B C\nC A\nA B\nD A\nD B\n",
                                    hyperfib::HypergraphFormat::HyperedgeList);
}

// Partition classes as sets of node labels, for order-insensitive comparison.
inline std::set<std::set<std::string>> label_classes(const hyperfib::Partition& p,
                                                     const hyperfib::Hypergraph& h) {
  std::set<std::set<std::string>> out;
  for (const auto& cls : p.classes) {
    std::set<std::string> members;
    for (int i : cls) members.insert(h.label(i));
    out.insert(std::move(members));
  }
  return out;
}

// Hyperedges as a multiset of label sets (order-insensitive).
inline std::vector<std::set<std::string>> label_edges(
    const std::vector<std::vector<int>>& edges, const hyperfib::Hypergraph& h) {
  std::vector<std::set<std::string>> out;
  for (const auto& e : edges) {
    std::set<std::string> members;
    for (int i : e) members.insert(h.label(i));
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil

#endif
