#ifndef SWITCHISO_CLASSIFY_HPP_
#define SWITCHISO_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "switchiso/graph.hpp"
#include "switchiso/signature.hpp"

namespace switchiso {

// Image of sig under an automorphism: edge e negative in sig makes
// edge_image[e] negative in the result.
Signature apply_automorphism(const Signature& sig, const Automorphism& perm);
// Validates perm first; throws kNotAutomorphism.
Signature apply_automorphism(const Signature& sig, std::span<const int> perm);

// switch_at(apply_automorphism(s1, perm), switch_set) == s2.
struct IsoWitness {
  std::vector<int> perm;
  std::vector<int> switch_set;
};

struct ClassReport {
  Signature canonical;
  std::uint64_t class_size = 0;  // raw signatures, out of 2^m
  CycleSpectrum spectrum;
  int frustration = 0;
  Signature min_rep;
};

struct FrustrationResult {
  int size = 0;
  Signature min_rep;
};

inline constexpr int kMaxCosetDimension = 24;
inline constexpr int kMaxSwitchDimension = 24;
inline constexpr std::size_t kMaxClassifyGroupOrder = 100'000;

// Minimum |switch_at(sig, S)| over all switching sets, with the least
// minimizer in BitVector order. Throws kTooLarge when n - c exceeds
// kMaxSwitchDimension.
FrustrationResult frustration_index(const Signature& sig);

// Orbits of Aut(g) on edge subsets of the given size whose negative subgraph
// has maximum degree at most max_deg.
std::int64_t automorphic_type_count(const Graph& g, int size, int max_deg);

// For a complete graph: every switching-isomorphism class has a minimal
// signature whose negative subgraph has max degree <= floor((n-1)/2).
// Throws kInvalidParam for non-complete graphs.
bool check_min_degree_bound(const Graph& g);
inline int min_degree_bound(int n) { return (n - 1) / 2; }

// Switching-isomorphism machinery over one graph: the automorphism group, the
// cut-space basis and the cycle list are computed once at construction.
class Classifier {
 public:
  explicit Classifier(GraphPtr graph);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const PermutationGroup& group() const { return group_; }
  const Gf2Basis& basis() const { return basis_; }
  std::span<const Cycle> cycles() const { return cycles_; }

  // Least coset-reduced image over the automorphism group.
  Signature canonical_form(const Signature& sig) const;

  std::optional<IsoWitness> is_switching_isomorphic(const Signature& a,
                                                    const Signature& b) const;
  // Automorphism mapping a onto b exactly (no switching).
  std::optional<Automorphism> find_automorphism(const Signature& a,
                                                const Signature& b) const;

  // All 2^(m-n+c) coset-reduced representatives, sorted. Throws kTooLarge
  // above kMaxCosetDimension.
  std::vector<Signature> enumerate_switching_classes() const;

  // One report per switching-isomorphism class, sorted by canonical key.
  // max_cycle_len 0 selects default_max_cycle_length. The result does not
  // depend on workers.
  std::vector<ClassReport> enumerate_isomorphism_classes(
      int max_cycle_len = 0, int workers = 1) const;

  std::int64_t automorphic_type_count(int size, int max_deg) const;

  CycleSpectrum spectrum(const Signature& sig, int max_len = 0) const;

 private:
  GraphPtr graph_;
  PermutationGroup group_;
  Gf2Basis basis_;
  std::vector<Cycle> cycles_;
};

std::vector<Signature> enumerate_switching_classes(GraphPtr graph);
std::vector<ClassReport> enumerate_isomorphism_classes(GraphPtr graph,
                                                       int max_cycle_len = 0,
                                                       int workers = 1);

// The nineteen K6 signatures of max negative degree 2, one per automorphic
// type, labeled S0..S18 by size. Vertices u1..u6 are 0..5.
struct NamedSignature {
  std::string label;
  Signature signature;
};
std::vector<NamedSignature> named_k6_representatives(GraphPtr k6 = nullptr);
Signature named_k6_representative(std::string_view label, GraphPtr k6 = nullptr);

}  // namespace switchiso

#endif  // SWITCHISO_CLASSIFY_HPP_
