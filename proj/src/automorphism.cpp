#include <algorithm>
#include <numeric>
#include <queue>

#include "switchiso/error.hpp"
#include "switchiso/graph.hpp"

namespace switchiso {

Automorphism make_automorphism(const Graph& g, std::span<const int> perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::kNotAutomorphism,
                "permutation has " + std::to_string(perm.size()) +
                    " entries, graph has " + std::to_string(n) + " vertices");
  }
  std::vector<bool> hit(n, false);
  for (const int image : perm) {
    if (image < 0 || image >= n || hit[image]) {
      throw Error(ErrorCode::kNotAutomorphism, "not a permutation");
    }
    hit[image] = true;
  }
  Automorphism a;
  a.vertex_image.assign(perm.begin(), perm.end());
  a.edge_image.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const int image = g.edge_index(perm[e.u], perm[e.v]);
    if (image < 0) {
      throw Error(ErrorCode::kNotAutomorphism,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") maps to a non-edge");
    }
    a.edge_image.push_back(image);
  }
  return a;
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  Automorphism out;
  out.vertex_image.resize(inner.vertex_image.size());
  out.edge_image.resize(inner.edge_image.size());
  for (std::size_t v = 0; v < inner.vertex_image.size(); ++v) {
    out.vertex_image[v] = outer.vertex_image[inner.vertex_image[v]];
  }
  for (std::size_t e = 0; e < inner.edge_image.size(); ++e) {
    out.edge_image[e] = outer.edge_image[inner.edge_image[e]];
  }
  return out;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism out;
  out.vertex_image.resize(a.vertex_image.size());
  out.edge_image.resize(a.edge_image.size());
  for (std::size_t v = 0; v < a.vertex_image.size(); ++v) {
    out.vertex_image[a.vertex_image[v]] = static_cast<int>(v);
  }
  for (std::size_t e = 0; e < a.edge_image.size(); ++e) {
    out.edge_image[a.edge_image[e]] = static_cast<int>(e);
  }
  return out;
}

bool PermutationGroup::contains(std::span<const int> vertex_image) const {
  const auto it = std::lower_bound(
      elements_.begin(), elements_.end(), vertex_image,
      [](const Automorphism& a, std::span<const int> target) {
        return std::lexicographical_compare(a.vertex_image.begin(),
                                            a.vertex_image.end(),
                                            target.begin(), target.end());
      });
  return it != elements_.end() &&
         std::equal(it->vertex_image.begin(), it->vertex_image.end(),
                    vertex_image.begin(), vertex_image.end());
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        image_(n_, -1),
        used_(n_, false) {
    // Breadth-first order, so most vertices have an already-placed neighbor
    // and adjacency pruning cuts early.
    std::vector<bool> seen(n_, false);
    for (int root = 0; root < n_; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::queue<int> frontier;
      frontier.push(root);
      while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        order_.push_back(v);
        for (const int w : g.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = true;
            frontier.push(w);
          }
        }
      }
    }
  }

  std::vector<Automorphism> run() {
    place(0);
    std::sort(found_.begin(), found_.end(),
              [](const Automorphism& a, const Automorphism& b) {
                return a.vertex_image < b.vertex_image;
              });
    return std::move(found_);
  }

 private:
  bool consistent(int depth, int v, int candidate) const {
    if (used_[candidate] || g_.degree(candidate) != g_.degree(v)) return false;
    for (int i = 0; i < depth; ++i) {
      const int w = order_[i];
      if (g_.has_edge(v, w) != g_.has_edge(candidate, image_[w])) return false;
    }
    return true;
  }

  void place(int depth) {
    if (depth == n_) {
      if (found_.size() >= kMaxGroupOrder) {
        throw Error(ErrorCode::kTooLarge,
                    "automorphism group exceeds " +
                        std::to_string(kMaxGroupOrder) + " elements");
      }
      found_.push_back(make_automorphism(g_, image_));
      return;
    }
    const int v = order_[depth];
    for (int candidate = 0; candidate < n_; ++candidate) {
      if (!consistent(depth, v, candidate)) continue;
      image_[v] = candidate;
      used_[candidate] = true;
      place(depth + 1);
      used_[candidate] = false;
      image_[v] = -1;
    }
  }

  const Graph& g_;
  const int n_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Automorphism> found_;
};

}  // namespace

PermutationGroup automorphism_group(const Graph& g) {
  if (g.num_vertices() > kMaxAutomorphismVertices) {
    throw Error(ErrorCode::kTooLarge,
                "automorphism search limited to " +
                    std::to_string(kMaxAutomorphismVertices) + " vertices");
  }
  return PermutationGroup(g.num_vertices(), AutomorphismSearch(g).run());
}

}  // namespace switchiso
