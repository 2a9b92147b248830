#include "switchiso/signature.hpp"

#include <algorithm>
#include <charconv>

#include "switchiso/error.hpp"

namespace switchiso {

Signature::Signature(GraphPtr graph, BitVector bits)
    : graph_(std::move(graph)), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(graph_->num_edges())) {
    throw Error(ErrorCode::kGraphMismatch,
                "signature has " + std::to_string(bits_.size()) +
                    " bits, graph has " +
                    std::to_string(graph_->num_edges()) + " edges");
  }
}

Signature::Signature(GraphPtr graph)
    : Signature(graph, BitVector(graph->num_edges())) {}

std::vector<Edge> Signature::negative_edges() const {
  std::vector<Edge> out;
  for (const int i : bits_.indices()) out.push_back(graph_->edge(i));
  return out;
}

std::string Signature::to_string() const {
  std::string out;
  for (const Edge& e : negative_edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

void require_same_graph(const Graph& a, const Graph& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorCode::kGraphMismatch,
                "signatures live on different graphs");
  }
}

Signature parse_signature(GraphPtr graph, std::span<const Edge> pairs) {
  BitVector bits(graph->num_edges());
  for (const Edge& e : pairs) {
    const int index = graph->edge_index(e.u, e.v);
    const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
    if (index < 0) throw Error(ErrorCode::kNotAnEdge, name);
    if (bits.test(index)) throw Error(ErrorCode::kDuplicateEdge, name);
    bits.set(index);
  }
  return Signature(std::move(graph), std::move(bits));
}

namespace {

int parse_vertex(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse,
                "bad edge '" + std::string(whole) + "' in signature");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Signature parse_signature(GraphPtr graph, std::string_view text) {
  std::vector<Edge> pairs;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorCode::kParse,
                  "bad edge '" + std::string(item) + "' in signature");
    }
    pairs.push_back({parse_vertex(item.substr(0, dash), item),
                     parse_vertex(item.substr(dash + 1), item)});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (trim(text).empty()) {
      throw Error(ErrorCode::kParse, "trailing comma in signature");
    }
  }
  return parse_signature(std::move(graph), pairs);
}

BitVector vertex_cut(const Graph& g, std::span<const int> vertices) {
  BitVector cut(g.num_edges());
  for (const int v : vertices) {
    if (v < 0 || v >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidVertex, std::to_string(v));
    }
    // An edge inside the set is flipped twice.
    for (const int e : g.incident_edges(v)) cut.flip(e);
  }
  return cut;
}

Signature switch_at(const Signature& sig, std::span<const int> vertices) {
  std::vector<int> unique(vertices.begin(), vertices.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return Signature(sig.graph_ptr(),
                   sig.bits() ^ vertex_cut(sig.graph(), unique));
}

Gf2Basis cut_space_basis(GraphPtr graph) {
  Gf2Basis basis;
  const Graph& g = *graph;
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    BitVector vertices(n);
    vertices.set(v);
    const int single[] = {v};
    BitVector row = basis.reduce(vertex_cut(g, single), vertices);
    if (row.none()) continue;
    const int pivot = static_cast<int>(row.first());
    // Keep the basis fully reduced: clear the new pivot from older rows.
    for (int i = 0; i < basis.rank(); ++i) {
      if (basis.rows_[i].test(pivot)) {
        basis.rows_[i] ^= row;
        basis.row_vertices_[i] ^= vertices;
      }
    }
    const auto at = std::lower_bound(basis.pivots_.begin(),
                                     basis.pivots_.end(), pivot) -
                    basis.pivots_.begin();
    basis.pivots_.insert(basis.pivots_.begin() + at, pivot);
    basis.rows_.insert(basis.rows_.begin() + at, std::move(row));
    basis.row_vertices_.insert(basis.row_vertices_.begin() + at,
                               std::move(vertices));
  }
  basis.graph_ = std::move(graph);
  return basis;
}

BitVector Gf2Basis::reduce(BitVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.test(pivots_[i])) v ^= rows_[i];
  }
  return v;
}

BitVector Gf2Basis::reduce(BitVector v, BitVector& switched_vertices) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.test(pivots_[i])) {
      v ^= rows_[i];
      switched_vertices ^= row_vertices_[i];
    }
  }
  return v;
}

Signature coset_reduce(const Signature& sig, const Gf2Basis& basis) {
  require_same_graph(sig.graph(), basis.graph());
  return Signature(sig.graph_ptr(), basis.reduce(sig.bits()));
}

bool is_switching_equivalent(const Signature& a, const Signature& b,
                             const Gf2Basis& basis) {
  require_same_graph(a.graph(), b.graph());
  require_same_graph(a.graph(), basis.graph());
  return basis.contains(a.bits() ^ b.bits());
}

bool is_switching_equivalent(const Signature& a, const Signature& b) {
  require_same_graph(a.graph(), b.graph());
  return is_switching_equivalent(a, b, cut_space_basis(a.graph_ptr()));
}

std::optional<std::vector<int>> switching_witness(const Signature& a,
                                                  const Signature& b,
                                                  const Gf2Basis& basis) {
  require_same_graph(a.graph(), b.graph());
  require_same_graph(a.graph(), basis.graph());
  BitVector vertices(a.graph().num_vertices());
  // Reducing a ^ b to zero subtracts δ(S) for the tracked S.
  if (basis.reduce(a.bits() ^ b.bits(), vertices).any()) return std::nullopt;
  return vertices.indices();
}

std::optional<std::vector<int>> switching_witness(const Signature& a,
                                                  const Signature& b) {
  require_same_graph(a.graph(), b.graph());
  return switching_witness(a, b, cut_space_basis(a.graph_ptr()));
}

int cycle_sign(const Signature& sig, const Cycle& cyc) {
  const Graph& g = sig.graph();
  const std::size_t k = cyc.vertices.size();
  if (k < 3 || cyc.edge_indices.size() != k) {
    throw Error(ErrorCode::kGraphMismatch, "malformed cycle");
  }
  bool negative = false;
  for (std::size_t i = 0; i < k; ++i) {
    const int e = cyc.edge_indices[i];
    const int a = cyc.vertices[i];
    const int b = cyc.vertices[(i + 1) % k];
    if (e < 0 || e >= g.num_edges() || g.edge_index(a, b) != e) {
      throw Error(ErrorCode::kGraphMismatch,
                  "cycle does not belong to the signature's graph");
    }
    negative ^= sig.is_negative(e);
  }
  return negative ? -1 : 1;
}

bool is_balanced(const Signature& sig, const Gf2Basis& basis) {
  require_same_graph(sig.graph(), basis.graph());
  return basis.contains(sig.bits());
}

bool is_balanced(const Signature& sig) {
  return is_balanced(sig, cut_space_basis(sig.graph_ptr()));
}

bool CycleSpectrum::is_zero() const {
  return std::all_of(counts.begin(), counts.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

CycleSpectrum negative_cycle_spectrum(const Signature& sig,
                                      std::span<const Cycle> cycles,
                                      int max_len) {
  if (max_len < 3) {
    throw Error(ErrorCode::kInvalidParam,
                "cycle length bound must be >= 3, got " +
                    std::to_string(max_len));
  }
  CycleSpectrum spectrum;
  const int top = std::min(max_len, sig.graph().num_vertices());
  for (int k = 3; k <= top; ++k) spectrum.counts[k] = 0;
  for (const Cycle& c : cycles) {
    if (c.length() > top) continue;
    if (cycle_sign(sig, c) < 0) ++spectrum.counts[c.length()];
  }
  return spectrum;
}

CycleSpectrum negative_cycle_spectrum(const Signature& sig, int max_len) {
  if (max_len < 3) {
    throw Error(ErrorCode::kInvalidParam,
                "cycle length bound must be >= 3, got " +
                    std::to_string(max_len));
  }
  const auto cycles = enumerate_cycles(sig.graph(), max_len);
  return negative_cycle_spectrum(sig, cycles, max_len);
}

std::vector<Cycle> unbalanced_cycle_set(const Signature& sig) {
  const Graph& g = sig.graph();
  std::vector<Cycle> out;
  if (g.num_vertices() < 3) return out;
  for (Cycle& c : enumerate_cycles(g, g.num_vertices())) {
    if (cycle_sign(sig, c) < 0) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace switchiso
