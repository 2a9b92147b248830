#ifndef SWITCHISO_SIGNATURE_HPP_
#define SWITCHISO_SIGNATURE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "switchiso/bit_vector.hpp"
#include "switchiso/graph.hpp"

namespace switchiso {

// Set of negative edges of a graph. Bit i is set iff edge i is negative.
class Signature {
 public:
  Signature(GraphPtr graph, BitVector bits);
  // All-positive signature.
  explicit Signature(GraphPtr graph);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const BitVector& bits() const { return bits_; }

  bool is_negative(int edge_index) const { return bits_.test(edge_index); }
  int size() const { return static_cast<int>(bits_.count()); }
  std::vector<Edge> negative_edges() const;

  // "u-v,u-v,..." in edge-index order; "" for the all-positive signature.
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.bits_ == b.bits_ && *a.graph_ == *b.graph_;
  }

 private:
  GraphPtr graph_;
  BitVector bits_;
};

// Throws kGraphMismatch unless both live on the same graph.
void require_same_graph(const Graph& a, const Graph& b);

// Throws kNotAnEdge for a pair that is not an edge, kDuplicateEdge for a
// repeated edge.
Signature parse_signature(GraphPtr graph, std::span<const Edge> pairs);
// Comma separated "u-v" pairs; empty string is the all-positive signature.
Signature parse_signature(GraphPtr graph, std::string_view text);

// Cut δ(S): edges with exactly one endpoint in S.
BitVector vertex_cut(const Graph& g, std::span<const int> vertices);

// Switching at a vertex set. Throws kInvalidVertex for out-of-range vertices.
Signature switch_at(const Signature& sig, std::span<const int> vertices);

// Row-echelon basis of the cut space. Each row records which single-vertex
// cuts it combines so that membership tests can return a switching set.
class Gf2Basis {
 public:
  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  std::span<const BitVector> rows() const { return rows_; }
  std::span<const int> pivots() const { return pivots_; }
  // Vertex set S with δ(S) == rows()[i].
  const BitVector& row_vertices(int i) const { return row_vertices_[i]; }

  // Zeroes every pivot position by adding rows; the result is the unique
  // member of v's coset with that property.
  BitVector reduce(BitVector v) const;
  // Same, also returning the vertex set whose cut was added.
  BitVector reduce(BitVector v, BitVector& switched_vertices) const;

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  // log2 of the number of cosets: m - rank.
  int coset_dimension() const { return graph_->num_edges() - rank(); }

 private:
  friend Gf2Basis cut_space_basis(GraphPtr graph);

  GraphPtr graph_;
  std::vector<BitVector> rows_;
  std::vector<int> pivots_;
  std::vector<BitVector> row_vertices_;
};

// Rank is n - c, so there are 2^(m - n + c) cosets.
Gf2Basis cut_space_basis(GraphPtr graph);

Signature coset_reduce(const Signature& sig, const Gf2Basis& basis);

bool is_switching_equivalent(const Signature& a, const Signature& b,
                             const Gf2Basis& basis);
bool is_switching_equivalent(const Signature& a, const Signature& b);

// Vertex set S with switch_at(a, S) == b, if a and b are equivalent.
std::optional<std::vector<int>> switching_witness(const Signature& a,
                                                  const Signature& b,
                                                  const Gf2Basis& basis);
std::optional<std::vector<int>> switching_witness(const Signature& a,
                                                  const Signature& b);

// +1 or -1. Throws kGraphMismatch if cyc is not a cycle of sig's graph.
int cycle_sign(const Signature& sig, const Cycle& cyc);

bool is_balanced(const Signature& sig, const Gf2Basis& basis);
bool is_balanced(const Signature& sig);

// Negative cycle counts by length.
struct CycleSpectrum {
  std::map<int, std::int64_t> counts;

  std::int64_t at(int length) const {
    auto it = counts.find(length);
    return it == counts.end() ? 0 : it->second;
  }
  bool is_zero() const;

  friend bool operator==(const CycleSpectrum&, const CycleSpectrum&) = default;
};

inline int default_max_cycle_length(const Graph& g) {
  return g.num_vertices() < 6 ? g.num_vertices() : 6;
}

CycleSpectrum negative_cycle_spectrum(const Signature& sig, int max_len);
// Same, over a precomputed cycle list (lengths max_len and below are counted).
CycleSpectrum negative_cycle_spectrum(const Signature& sig,
                                      std::span<const Cycle> cycles,
                                      int max_len);

// All negative cycles of every length, sorted.
std::vector<Cycle> unbalanced_cycle_set(const Signature& sig);

}  // namespace switchiso

#endif  // SWITCHISO_SIGNATURE_HPP_
