#include "hyperfib/hypergraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "hyperfib/error.hpp"
#include "hyperfib/rng.hpp"

namespace hyperfib {

Hypergraph::Hypergraph(int node_count, std::vector<std::vector<int>> hyperedges,
                       std::vector<std::string> labels)
    : node_count_(node_count),
      edges_(std::move(hyperedges)),
      labels_(std::move(labels)) {
  for (auto& e : edges_) {
    if (e.empty()) throw Error(ErrorCode::EmptyHyperedge, "empty hyperedge");
    std::sort(e.begin(), e.end());
    if (e.front() < 0 || e.back() >= node_count_)
      throw Error(ErrorCode::MalformedLine, "hyperedge member out of range");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != node_count_)
      throw Error(ErrorCode::MalformedLine, "label count mismatch");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != node_count_)
      throw Error(ErrorCode::MalformedLine, "duplicate node label");
  }
}

std::string Hypergraph::label(int i) const {
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

int Hypergraph::rank() const {
  int r = 0;
  for (const auto& e : edges_) r = std::max(r, static_cast<int>(e.size()));
  return r;
}

namespace {

Hypergraph parse_hyperedge_list(const std::string& text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index_of;
  std::vector<std::vector<int>> edges;

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    std::vector<int> edge;
    std::string token;
    while (tokens >> token) {
      for (unsigned char ch : token)
        if (std::iscntrl(ch))
          throw Error(ErrorCode::MalformedLine, "control character in line: " + line);
      auto [it, inserted] =
          index_of.try_emplace(token, static_cast<int>(labels.size()));
      if (inserted) labels.push_back(token);
      edge.push_back(it->second);
    }
    if (!edge.empty()) edges.push_back(std::move(edge));
  }
  if (edges.empty()) throw Error(ErrorCode::EmptyInput, "no hyperedges in input");
  int n = static_cast<int>(labels.size());
  return Hypergraph(n, std::move(edges), std::move(labels));
}

Hypergraph parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLine, e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("hyperedges"))
    throw Error(ErrorCode::MalformedLine, "expected {\"nodes\", \"hyperedges\"}");

  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index_of;
  auto as_label = [](const nlohmann::json& j) -> std::string {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorCode::MalformedLine, "node label must be string or integer");
  };
  for (const auto& j : doc["nodes"]) {
    std::string label = as_label(j);
    if (!index_of.try_emplace(label, static_cast<int>(labels.size())).second)
      throw Error(ErrorCode::MalformedLine, "duplicate node label: " + label);
    labels.push_back(std::move(label));
  }

  std::vector<std::vector<int>> edges;
  for (const auto& je : doc["hyperedges"]) {
    if (!je.is_array())
      throw Error(ErrorCode::MalformedLine, "hyperedge must be an array");
    if (je.empty()) throw Error(ErrorCode::EmptyHyperedge, "empty hyperedge");
    std::vector<int> edge;
    for (const auto& j : je) {
      std::string label = as_label(j);
      auto it = index_of.find(label);
      if (it == index_of.end())
        throw Error(ErrorCode::MalformedLine, "unknown node label: " + label);
      edge.push_back(it->second);
    }
    edges.push_back(std::move(edge));
  }
  if (edges.empty()) throw Error(ErrorCode::EmptyInput, "no hyperedges in input");
  int n = static_cast<int>(labels.size());
  return Hypergraph(n, std::move(edges), std::move(labels));
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text, HypergraphFormat format) {
  if (text.empty()) throw Error(ErrorCode::EmptyInput, "empty input");
  return format == HypergraphFormat::HyperedgeList ? parse_hyperedge_list(text)
                                                   : parse_json(text);
}

std::string write_hyperedge_list(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.hyperedges()) {
    std::vector<std::string> members;
    members.reserve(e.size());
    for (int i : e) members.push_back(h.label(i));
    std::sort(members.begin(), members.end());
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) out += ' ';
      out += members[k];
    }
    out += '\n';
  }
  return out;
}

std::string write_json(const Hypergraph& h) {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (int i = 0; i < h.node_count(); ++i) doc["nodes"].push_back(h.label(i));
  doc["hyperedges"] = nlohmann::json::array();
  for (const auto& e : h.hyperedges()) {
    nlohmann::json je = nlohmann::json::array();
    for (int i : e) je.push_back(h.label(i));
    doc["hyperedges"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

IncidenceBipartite incidence(const Hypergraph& h) {
  IncidenceBipartite b;
  b.left_count = h.node_count();
  b.right_count = h.edge_count();
  b.adjacency.resize(b.vertex_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& members = h.hyperedge(e);
    int edge_vertex = b.left_count + e;
    // members are sorted, so repeated occurrences are contiguous
    for (std::size_t k = 0; k < members.size();) {
      std::size_t run = k;
      while (run < members.size() && members[run] == members[k]) ++run;
      int multiplicity = static_cast<int>(run - k);
      b.adjacency[members[k]].emplace_back(edge_vertex, multiplicity);
      b.adjacency[edge_vertex].emplace_back(members[k], multiplicity);
      k = run;
    }
  }
  return b;
}

Hypergraph from_incidence(const IncidenceBipartite& b,
                          std::vector<std::string> labels) {
  std::vector<std::vector<int>> edges(b.right_count);
  for (int e = 0; e < b.right_count; ++e)
    for (auto [node, mult] : b.adjacency[b.left_count + e])
      edges[e].insert(edges[e].end(), mult, node);
  return Hypergraph(b.left_count, std::move(edges), std::move(labels));
}

Hypergraph project(const Hypergraph& h, ProjectionMode mode) {
  std::vector<std::vector<int>> pairs;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : h.hyperedges()) {
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        if (mode == ProjectionMode::Multi) {
          pairs.push_back({e[a], e[b]});
        } else {
          if (e[a] == e[b]) continue;
          if (seen.insert({e[a], e[b]}).second) pairs.push_back({e[a], e[b]});
        }
      }
  }
  return Hypergraph(h.node_count(), std::move(pairs), h.labels());
}

DegreeProfile degrees(const Hypergraph& h) {
  DegreeProfile d;
  d.node_count = h.node_count();
  d.rank = h.rank();
  d.counts.assign(static_cast<std::size_t>(d.node_count) * (d.rank + 1), 0);
  for (const auto& e : h.hyperedges()) {
    int m = static_cast<int>(e.size());
    for (int i : e) ++d.counts[static_cast<std::size_t>(i) * (d.rank + 1) + m];
  }
  return d;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

UnionFind components_of(const Hypergraph& h) {
  UnionFind uf(h.node_count());
  for (const auto& e : h.hyperedges())
    for (std::size_t k = 1; k < e.size(); ++k) uf.unite(e[0], e[k]);
  return uf;
}

}  // namespace

ConnectivityResult connectivity(const Hypergraph& h) {
  UnionFind uf = components_of(h);
  std::vector<int> root(h.node_count());
  for (int i = 0; i < h.node_count(); ++i) root[i] = uf.find(i);
  ConnectivityResult r;
  r.components = Partition::from_labels(root);
  r.is_connected = r.components.class_count() <= 1;
  return r;
}

ComponentExtraction largest_component(const Hypergraph& h) {
  Partition components = connectivity(h).components;
  int best = 0;
  for (int c = 1; c < components.class_count(); ++c)
    if (components.classes[c].size() > components.classes[best].size()) best = c;

  ComponentExtraction out;
  out.old_to_new.assign(h.node_count(), -1);
  std::vector<std::string> labels;
  int next = 0;
  for (int i = 0; i < h.node_count(); ++i) {
    if (components.class_of[i] != best) continue;
    out.old_to_new[i] = next++;
    if (h.has_labels()) labels.push_back(h.labels()[i]);
  }
  std::vector<std::vector<int>> edges;
  for (const auto& e : h.hyperedges()) {
    if (components.class_of[e[0]] != best) continue;
    std::vector<int> mapped;
    mapped.reserve(e.size());
    for (int i : e) mapped.push_back(out.old_to_new[i]);
    edges.push_back(std::move(mapped));
  }
  out.hypergraph = Hypergraph(next, std::move(edges), std::move(labels));
  return out;
}

Hypergraph drop_singleton_hyperedges(const Hypergraph& h) {
  std::vector<std::vector<int>> edges;
  for (const auto& e : h.hyperedges())
    if (e.size() >= 2) edges.push_back(e);
  return Hypergraph(h.node_count(), std::move(edges), h.labels());
}

Hypergraph dedup_hyperedges(const Hypergraph& h) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> edges;
  for (const auto& e : h.hyperedges())
    if (seen.insert(e).second) edges.push_back(e);
  return Hypergraph(h.node_count(), std::move(edges), h.labels());
}

Hypergraph random_hypergraph(int n, int m2, int m3, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidCounts, "need at least 3 nodes");
  if (m2 < 0 || m3 < 0 || m2 + m3 == 0)
    throw Error(ErrorCode::InvalidCounts, "need at least one hyperedge");
  auto c2 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  auto c3 = static_cast<std::uint64_t>(n) * (n - 1) * (n - 2) / 6;
  if (static_cast<std::uint64_t>(m2) > c2)
    throw Error(ErrorCode::InvalidCounts, "m2 exceeds available pairs");
  if (static_cast<std::uint64_t>(m3) > c3)
    throw Error(ErrorCode::InvalidCounts, "m3 exceeds available triples");

  SplitMix64 rng(seed);
  std::set<std::vector<int>> drawn;
  std::vector<std::vector<int>> edges;
  while (static_cast<int>(edges.size()) < m2) {
    int a = static_cast<int>(rng.next_below(n));
    int b = static_cast<int>(rng.next_below(n - 1));
    if (b >= a) ++b;
    std::vector<int> e = {std::min(a, b), std::max(a, b)};
    if (drawn.insert(e).second) edges.push_back(std::move(e));
  }
  drawn.clear();
  while (static_cast<int>(edges.size()) < m2 + m3) {
    int a = static_cast<int>(rng.next_below(n));
    int b = static_cast<int>(rng.next_below(n));
    int c = static_cast<int>(rng.next_below(n));
    if (a == b || a == c || b == c) continue;
    std::vector<int> e = {a, b, c};
    std::sort(e.begin(), e.end());
    if (drawn.insert(e).second) edges.push_back(std::move(e));
  }
  return largest_component(Hypergraph(n, std::move(edges))).hypergraph;
}

}  // namespace hyperfib
