#include "switchiso/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <thread>
#include <unordered_set>

#include "switchiso/error.hpp"

namespace switchiso {
namespace {

BitVector permute_bits(const BitVector& bits, const Automorphism& perm) {
  BitVector out(bits.size());
  for (const int e : bits.indices()) out.set(perm.edge_image[e]);
  return out;
}

// Reduced representatives are exactly the vectors vanishing on pivots.
std::vector<Signature> coset_representatives(const GraphPtr& graph,
                                             const Gf2Basis& basis) {
  const int dim = basis.coset_dimension();
  if (dim > kMaxCosetDimension) {
    throw Error(ErrorCode::kTooLarge,
                "2^" + std::to_string(dim) + " switching classes");
  }
  std::vector<int> free_positions;
  const auto pivots = basis.pivots();
  for (int e = 0; e < graph->num_edges(); ++e) {
    if (!std::binary_search(pivots.begin(), pivots.end(), e)) {
      free_positions.push_back(e);
    }
  }
  std::vector<BitVector> reps;
  reps.reserve(std::size_t{1} << dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    BitVector v(graph->num_edges());
    for (int j = 0; j < dim; ++j) {
      if ((mask >> j) & 1u) v.set(free_positions[j]);
    }
    reps.push_back(std::move(v));
  }
  std::sort(reps.begin(), reps.end());
  std::vector<Signature> out;
  out.reserve(reps.size());
  for (BitVector& v : reps) out.emplace_back(graph, std::move(v));
  return out;
}

int max_negative_degree(const Signature& sig) {
  std::vector<int> degree(sig.graph().num_vertices(), 0);
  int best = 0;
  for (const Edge& e : sig.negative_edges()) {
    best = std::max({best, ++degree[e.u], ++degree[e.v]});
  }
  return best;
}

}  // namespace

Signature apply_automorphism(const Signature& sig, const Automorphism& perm) {
  if (perm.edge_image.size() != static_cast<std::size_t>(sig.graph().num_edges())) {
    throw Error(ErrorCode::kNotAutomorphism,
                "automorphism belongs to a different graph");
  }
  return Signature(sig.graph_ptr(), permute_bits(sig.bits(), perm));
}

Signature apply_automorphism(const Signature& sig, std::span<const int> perm) {
  return apply_automorphism(sig, make_automorphism(sig.graph(), perm));
}

FrustrationResult frustration_index(const Signature& sig) {
  const Graph& g = sig.graph();
  std::vector<BitVector> cuts;
  std::vector<bool> root_seen(g.num_components(), false);
  for (int v = 0; v < g.num_vertices(); ++v) {
    // The smallest vertex of each component stays fixed: switching a whole
    // component changes nothing.
    if (!root_seen[g.component_of(v)]) {
      root_seen[g.component_of(v)] = true;
      continue;
    }
    const int single[] = {v};
    cuts.push_back(vertex_cut(g, single));
  }
  const int free_count = static_cast<int>(cuts.size());
  if (free_count > kMaxSwitchDimension) {
    throw Error(ErrorCode::kTooLarge,
                "2^" + std::to_string(free_count) + " switching sets");
  }

  BitVector current = sig.bits();
  BitVector best = current;
  std::size_t best_count = best.count();
  // Gray-code walk: consecutive switching sets differ in one vertex.
  const std::uint64_t total = std::uint64_t{1} << free_count;
  for (std::uint64_t i = 1; i < total; ++i) {
    current ^= cuts[std::countr_zero(i)];
    const std::size_t c = current.count();
    if (c < best_count || (c == best_count && current < best)) {
      best = current;
      best_count = c;
    }
  }
  return {static_cast<int>(best_count), Signature(sig.graph_ptr(), best)};
}

Classifier::Classifier(GraphPtr graph)
    : graph_(graph),
      group_(automorphism_group(*graph)),
      basis_(cut_space_basis(graph)) {
  if (graph_->num_vertices() >= 3) {
    cycles_ = enumerate_cycles(*graph_, default_max_cycle_length(*graph_));
  }
}

Signature Classifier::canonical_form(const Signature& sig) const {
  require_same_graph(sig.graph(), *graph_);
  BitVector best = basis_.reduce(sig.bits());
  for (const Automorphism& a : group_.elements()) {
    BitVector candidate = basis_.reduce(permute_bits(sig.bits(), a));
    if (candidate < best) best = std::move(candidate);
  }
  return Signature(graph_, std::move(best));
}

std::optional<IsoWitness> Classifier::is_switching_isomorphic(
    const Signature& a, const Signature& b) const {
  require_same_graph(a.graph(), b.graph());
  require_same_graph(a.graph(), *graph_);
  for (const Automorphism& perm : group_.elements()) {
    BitVector vertices(graph_->num_vertices());
    if (basis_.reduce(permute_bits(a.bits(), perm) ^ b.bits(), vertices)
            .none()) {
      return IsoWitness{perm.vertex_image, vertices.indices()};
    }
  }
  return std::nullopt;
}

std::optional<Automorphism> Classifier::find_automorphism(
    const Signature& a, const Signature& b) const {
  require_same_graph(a.graph(), b.graph());
  require_same_graph(a.graph(), *graph_);
  if (a.size() != b.size()) return std::nullopt;
  for (const Automorphism& perm : group_.elements()) {
    if (permute_bits(a.bits(), perm) == b.bits()) return perm;
  }
  return std::nullopt;
}

std::vector<Signature> Classifier::enumerate_switching_classes() const {
  return coset_representatives(graph_, basis_);
}

CycleSpectrum Classifier::spectrum(const Signature& sig, int max_len) const {
  if (max_len <= 0) max_len = default_max_cycle_length(*graph_);
  if (max_len < 3) return {};
  if (max_len <= default_max_cycle_length(*graph_)) {
    return negative_cycle_spectrum(sig, cycles_, max_len);
  }
  return negative_cycle_spectrum(sig, max_len);
}

std::vector<ClassReport> Classifier::enumerate_isomorphism_classes(
    int max_cycle_len, int workers) const {
  if (group_.order() > kMaxClassifyGroupOrder) {
    throw Error(ErrorCode::kTooLarge,
                "automorphism group of order " +
                    std::to_string(group_.order()));
  }
  const std::vector<Signature> reps = enumerate_switching_classes();
  std::vector<BitVector> keys(reps.size());
  workers = std::clamp<int>(workers, 1, std::max<int>(1, reps.size()));
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (reps.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(reps.size(), begin + chunk);
      pool.emplace_back([this, &reps, &keys, begin, end] {
        for (std::size_t i = begin; i < end; ++i) {
          keys[i] = canonical_form(reps[i]).bits();
        }
      });
    }
  }

  std::map<BitVector, std::uint64_t> orbit_sizes;
  for (const BitVector& k : keys) ++orbit_sizes[k];

  const int switch_dim = graph_->num_vertices() - graph_->num_components();
  std::vector<ClassReport> reports;
  reports.reserve(orbit_sizes.size());
  for (const auto& [key, cosets] : orbit_sizes) {
    Signature canonical(graph_, key);
    FrustrationResult frustration = frustration_index(canonical);
    CycleSpectrum spec = spectrum(canonical, max_cycle_len);
    reports.push_back(ClassReport{
        canonical, cosets << switch_dim, std::move(spec), frustration.size,
        std::move(frustration.min_rep)});
  }
  return reports;
}

std::int64_t Classifier::automorphic_type_count(int size, int max_deg) const {
  const int m = graph_->num_edges();
  if (size < 0 || size > m) {
    throw Error(ErrorCode::kInvalidParam,
                "size must be in 0.." + std::to_string(m));
  }
  std::unordered_set<BitVector, BitVectorHash> orbits;
  std::vector<bool> choose(m, false);
  std::fill(choose.begin(), choose.begin() + size, true);
  std::vector<int> degree(graph_->num_vertices());
  do {
    std::fill(degree.begin(), degree.end(), 0);
    BitVector subset(m);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!choose[e]) continue;
      subset.set(e);
      const Edge& edge = graph_->edge(e);
      ok = ++degree[edge.u] <= max_deg && ++degree[edge.v] <= max_deg;
    }
    if (!ok) continue;
    BitVector least = subset;
    for (const Automorphism& a : group_.elements()) {
      BitVector image = permute_bits(subset, a);
      if (image < least) least = std::move(image);
    }
    orbits.insert(std::move(least));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return static_cast<std::int64_t>(orbits.size());
}

std::vector<Signature> enumerate_switching_classes(GraphPtr graph) {
  // No automorphism group needed, so skip the Classifier and its guards.
  return coset_representatives(graph, cut_space_basis(graph));
}

std::vector<ClassReport> enumerate_isomorphism_classes(GraphPtr graph,
                                                       int max_cycle_len,
                                                       int workers) {
  return Classifier(std::move(graph))
      .enumerate_isomorphism_classes(max_cycle_len, workers);
}

std::int64_t automorphic_type_count(const Graph& g, int size, int max_deg) {
  return Classifier(std::make_shared<const Graph>(g))
      .automorphic_type_count(size, max_deg);
}

bool check_min_degree_bound(const Graph& g) {
  if (!g.is_complete()) {
    throw Error(ErrorCode::kInvalidParam,
                "degree bound check applies to complete graphs only");
  }
  const int bound = min_degree_bound(g.num_vertices());
  const auto reports =
      enumerate_isomorphism_classes(std::make_shared<const Graph>(g));
  return std::all_of(reports.begin(), reports.end(), [&](const ClassReport& r) {
    return max_negative_degree(r.min_rep) <= bound;
  });
}

}  // namespace switchiso
