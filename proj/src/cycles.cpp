#include <algorithm>
#include <numeric>

#include "switchiso/error.hpp"
#include "switchiso/graph.hpp"

namespace switchiso {
namespace {

Cycle make_cycle(const Graph& g, std::vector<int> vertices) {
  Cycle c;
  const int k = static_cast<int>(vertices.size());
  c.edge_indices.reserve(k);
  for (int i = 0; i < k; ++i) {
    c.edge_indices.push_back(g.edge_index(vertices[i], vertices[(i + 1) % k]));
  }
  c.vertices = std::move(vertices);
  return c;
}

// Each k-subset of K_n carries (k-1)!/2 cycles: fix the smallest vertex,
// permute the rest, keep one of each mirror pair.
void complete_graph_cycles(const Graph& g, int max_len,
                           std::vector<Cycle>& out) {
  const int n = g.num_vertices();
  for (int k = 3; k <= max_len; ++k) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + k, true);
    do {
      std::vector<int> subset;
      for (int v = 0; v < n; ++v) {
        if (choose[v]) subset.push_back(v);
      }
      std::vector<int> rest(subset.begin() + 1, subset.end());
      do {
        if (rest.front() > rest.back()) continue;
        std::vector<int> cyc = {subset.front()};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        out.push_back(make_cycle(g, std::move(cyc)));
      } while (std::next_permutation(rest.begin(), rest.end()));
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
}

class RootedCycleSearch {
 public:
  RootedCycleSearch(const Graph& g, int max_len, std::vector<Cycle>& out)
      : g_(g), max_len_(max_len), out_(out), on_path_(g.num_vertices(), false) {}

  void run() {
    for (int root = 0; root < g_.num_vertices(); ++root) {
      path_ = {root};
      on_path_[root] = true;
      extend();
      on_path_[root] = false;
    }
  }

 private:
  // Only vertices larger than the root are visited, so the root is the
  // cycle minimum; the orientation filter keeps one of each mirror pair.
  void extend() {
    const int root = path_.front();
    const int last = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && path_[1] < last && g_.has_edge(last, root)) {
      out_.push_back(make_cycle(g_, path_));
    }
    if (len == max_len_) return;
    for (const int w : g_.neighbors(last)) {
      if (w <= root || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend();
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const Graph& g_;
  const int max_len_;
  std::vector<Cycle>& out_;
  std::vector<bool> on_path_;
  std::vector<int> path_;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len) {
  if (max_len < 3) {
    throw Error(ErrorCode::kInvalidParam,
                "cycle length bound must be >= 3, got " +
                    std::to_string(max_len));
  }
  max_len = std::min(max_len, g.num_vertices());
  std::vector<Cycle> cycles;
  if (g.num_vertices() >= 3 && g.is_complete()) {
    complete_graph_cycles(g, max_len, cycles);
  } else {
    RootedCycleSearch(g, max_len, cycles).run();
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace switchiso
