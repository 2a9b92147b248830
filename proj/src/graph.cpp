#include "switchiso/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>

#include "switchiso/error.hpp"

namespace switchiso {

Graph build_graph(int n, std::span<const Edge> edge_pairs) {
  if (n < 0) throw Error(ErrorCode::kInvalidParam, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edge_pairs.size());
  for (const Edge& e : edge_pairs) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidEdge,
                  "vertex out of range in (" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidEdge,
                  "loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
      dup != g.edges_.end()) {
    throw Error(ErrorCode::kDuplicateEdge, "(" + std::to_string(dup->u) + "," +
                                               std::to_string(dup->v) + ")");
  }

  const auto un = static_cast<std::size_t>(n);
  g.index_matrix_.assign(un * un, -1);
  g.adjacency_.assign(un, {});
  g.incident_.assign(un, {});
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges_[i];
    g.index_matrix_[e.u * un + e.v] = i;
    g.index_matrix_[e.v * un + e.u] = i;
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
    g.incident_[e.u].push_back(i);
    g.incident_[e.v].push_back(i);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());

  g.component_.assign(un, -1);
  for (int s = 0; s < n; ++s) {
    if (g.component_[s] >= 0) continue;
    const int id = g.num_components_++;
    std::vector<int> stack = {s};
    g.component_[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int w : g.adjacency_[v]) {
        if (g.component_[w] < 0) {
          g.component_[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return g;
}

GraphPtr make_graph(int n, std::span<const Edge> edge_pairs) {
  return std::make_shared<const Graph>(build_graph(n, edge_pairs));
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  return index_matrix_[static_cast<std::size_t>(u) * n_ + v];
}

bool Graph::is_complete() const {
  return static_cast<long>(edges_.size()) == static_cast<long>(n_) * (n_ - 1) / 2;
}

namespace {

int require_param(std::string_view name, std::optional<int> param, int min) {
  if (!param) {
    throw Error(ErrorCode::kInvalidParam,
                std::string(name) + " needs a vertex count");
  }
  if (*param < min) {
    throw Error(ErrorCode::kInvalidParam,
                std::string(name) + " needs n >= " + std::to_string(min));
  }
  return *param;
}

}  // namespace

Graph builtin_graph(std::string_view name, std::optional<int> param) {
  std::vector<Edge> edges;
  if (name == "complete") {
    const int n = require_param(name, param, 1);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return build_graph(n, edges);
  }
  if (name == "cycle") {
    const int n = require_param(name, param, 3);
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return build_graph(n, edges);
  }
  if (name == "path") {
    const int n = require_param(name, param, 1);
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return build_graph(n, edges);
  }
  if (name == "petersen" || name == "heawood") {
    if (param) {
      throw Error(ErrorCode::kInvalidParam,
                  std::string(name) + " takes no parameter");
    }
    if (name == "petersen") {
      for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
        edges.push_back({i, i + 5});
      }
      return build_graph(10, edges);
    }
    for (int i = 0; i < 14; ++i) {
      edges.push_back({i, (i + 1) % 14});
      if (i % 2 == 0) edges.push_back({i, (i + 5) % 14});
    }
    return build_graph(14, edges);
  }
  throw Error(ErrorCode::kUnknownGraph, std::string(name));
}

Graph builtin_graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return builtin_graph(spec);
  const std::string_view name = spec.substr(0, colon);
  const std::string_view digits = spec.substr(colon + 1);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      digits.empty()) {
    throw Error(ErrorCode::kParse,
                "bad graph parameter '" + std::string(digits) + "'");
  }
  return builtin_graph(name, value);
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    const auto fail = [&](const std::string& what) {
      return Error(ErrorCode::kParse,
                   "line " + std::to_string(line_no) + ": " + what);
    };
    if (tag == "n") {
      int count = 0;
      if (n) throw fail("repeated vertex count");
      if (!(fields >> count) || count < 0) throw fail("bad vertex count");
      n = count;
    } else if (tag == "e") {
      if (!n) throw fail("edge before vertex count");
      Edge e;
      if (!(fields >> e.u >> e.v)) throw fail("bad edge");
      edges.push_back(e);
    } else {
      throw fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing input '" + extra + "'");
  }
  if (!n) throw Error(ErrorCode::kParse, "missing vertex count");
  return build_graph(*n, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<int> spanning_forest(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<int> forest;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (const int w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        forest.push_back(g.edge_index(v, w));
        frontier.push(w);
      }
    }
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

}  // namespace switchiso
