#ifndef SWITCHISO_GRAPH_HPP_
#define SWITCHISO_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace switchiso {

// Unordered vertex pair, stored with u < v once inside a Graph.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are indexed in
// lexicographic (u, v) order; every bit vector in the library is laid out
// against this indexing.
class Graph {
 public:
  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_components() const { return num_components_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  // Index of edge {u, v}, or -1 when absent or out of range.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  // Edge indices incident to v, increasing.
  std::span<const int> incident_edges(int v) const { return incident_[v]; }

  // Component id of each vertex; ids are assigned in order of smallest vertex.
  int component_of(int v) const { return component_[v]; }
  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edge_pairs);

  int n_ = 0;
  int num_components_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> index_matrix_;  // n*n, -1 where no edge
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> component_;
};

using GraphPtr = std::shared_ptr<const Graph>;

// Throws kInvalidEdge for loops or out-of-range endpoints, kDuplicateEdge for
// a repeated pair (in either orientation).
Graph build_graph(int n, std::span<const Edge> edge_pairs);
GraphPtr make_graph(int n, std::span<const Edge> edge_pairs);

// name is one of complete, cycle, path (which need param), petersen, heawood.
//
// Labelings:
//   complete:n  all pairs on 0..n-1
//   cycle:n     (i, i+1 mod n)
//   path:n      (i, i+1) for i < n-1
//   petersen    outer 5-cycle 0..4, inner pentagram (5+i, 5+(i+2) mod 5),
//               spokes (i, i+5)
//   heawood     Hamiltonian cycle (i, i+1 mod 14) plus chords (i, i+5 mod 14)
//               for even i
Graph builtin_graph(std::string_view name, std::optional<int> param = {});

// Parses "name" or "name:param" (e.g. "complete:6", "petersen").
Graph builtin_graph_from_spec(std::string_view spec);

// Text format: "n <count>" on the first non-comment line, then "e <u> <v>"
// lines. '#' starts a comment. Throws kParse on malformed input.
Graph parse_graph_text(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph_text(const Graph& g);

// Simple cycle in canonical orientation: vertices[0] is the smallest vertex
// and vertices[1] < vertices.back(). edge_indices[i] joins vertices[i] and
// vertices[i+1 mod k].
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edge_indices;

  int length() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.vertices == b.vertices;
  }
  friend auto operator<=>(const Cycle& a, const Cycle& b) {
    return a.vertices <=> b.vertices;
  }
};

// Every simple cycle of length 3..max_len exactly once, sorted by vertex
// sequence. max_len above n is clamped to n; max_len < 3 throws
// kInvalidParam.
std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len);

struct Automorphism {
  std::vector<int> vertex_image;
  std::vector<int> edge_image;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.vertex_image == b.vertex_image;
  }
};

// Builds the edge action of a vertex permutation. Throws kNotAutomorphism if
// perm is not a permutation of 0..n-1 or does not preserve adjacency.
Automorphism make_automorphism(const Graph& g, std::span<const int> perm);
Automorphism compose(const Automorphism& outer, const Automorphism& inner);
Automorphism inverse(const Automorphism& a);

class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Automorphism> elements)
      : degree_(degree), elements_(std::move(elements)) {}

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  // Sorted by vertex image; elements()[0] is the identity.
  std::span<const Automorphism> elements() const { return elements_; }
  bool contains(std::span<const int> vertex_image) const;

 private:
  int degree_;
  std::vector<Automorphism> elements_;
};

inline constexpr int kMaxAutomorphismVertices = 14;
inline constexpr std::size_t kMaxGroupOrder = 1'000'000;

// Full automorphism group by backtracking over vertex images. Throws
// kTooLarge when n exceeds kMaxAutomorphismVertices or the group exceeds
// kMaxGroupOrder elements.
PermutationGroup automorphism_group(const Graph& g);

// Breadth-first spanning forest rooted at the smallest vertex of each
// component. Returns n - c sorted edge indices.
std::vector<int> spanning_forest(const Graph& g);

}  // namespace switchiso

#endif  // SWITCHISO_GRAPH_HPP_
