// Copyright 2026 The grundy-spectral Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grundy/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

#include "grundy/rng.hpp"

namespace grundy {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") out of range for n = " +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->first) + ", " +
                     std::to_string(dup->second) + ")");
  }

  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each neighbor list comes out sorted too.
  for (auto [u, v] : edges_) targets_[fill[u]++] = v;
  for (auto [u, v] : edges_) targets_[fill[v]++] = u;
  for (int v = 0; v < n; ++v) {
    std::sort(targets_.begin() + offsets_[v], targets_.begin() + offsets_[v + 1]);
  }

  if (n <= kMaskLimit) {
    masks_.assign(n, 0);
    for (auto [u, v] : edges_) {
      masks_[u] |= std::uint64_t{1} << v;
      masks_[v] |= std::uint64_t{1} << u;
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (has_masks()) return (masks_[u] >> v) & 1;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::without_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  keep.reserve(n_ - 1);
  for (Vertex u = 0; u < n_; ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(keep);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> label(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) label[keep[i]] = int(i);
  std::vector<Edge> sub;
  for (auto [u, v] : edges_) {
    if (label[u] >= 0 && label[v] >= 0) sub.emplace_back(label[u], label[v]);
  }
  return Graph(int(keep.size()), sub);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits on runs of blanks.
std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_index(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0 ||
      value > (1LL << 30)) {
    throw GraphError("line " + std::to_string(line) + ": bad integer '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> declared_n;
  std::vector<Edge> edges;
  std::vector<int> edge_line;
  int line_no = 0;
  long long max_index = -1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto f = fields(line);
    if (f.size() == 2 && f[0] == "n") {
      if (declared_n || !edges.empty()) {
        throw GraphError("line " + std::to_string(line_no) +
                         ": header must appear once, before any edge");
      }
      declared_n = int(parse_index(f[1], line_no));
      continue;
    }
    if (f.size() != 2) {
      throw GraphError("line " + std::to_string(line_no) +
                       ": expected 'u v' or 'n <count>'");
    }
    const auto u = parse_index(f[0], line_no);
    const auto v = parse_index(f[1], line_no);
    if (u == v) {
      throw GraphError("line " + std::to_string(line_no) + ": self-loop at " +
                       std::to_string(u));
    }
    if (declared_n && std::max(u, v) >= *declared_n) {
      throw GraphError("line " + std::to_string(line_no) + ": vertex " +
                       std::to_string(std::max(u, v)) + " >= n = " +
                       std::to_string(*declared_n));
    }
    max_index = std::max({max_index, u, v});
    edges.emplace_back(int(u), int(v));
    edge_line.push_back(line_no);
  }

  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](std::size_t i) {
    return Edge{std::min(edges[i].first, edges[i].second),
                std::max(edges[i].first, edges[i].second)};
  };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](auto a, auto b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (key(idx[i]) == key(idx[i - 1])) {
      throw GraphError("line " + std::to_string(edge_line[idx[i]]) +
                       ": duplicate edge " + std::to_string(key(idx[i]).first) +
                       " " + std::to_string(key(idx[i]).second));
    }
  }
  const int n = declared_n.value_or(int(max_index + 1));
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) return {};
  DegreeStats s{0, g.degree(0)};
  for (Vertex v = 0; v < g.order(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
    s.min_degree = std::min(s.min_degree, g.degree(v));
  }
  return s;
}

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<std::set<Vertex>> bucket(std::max(n, 1));
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    bucket[deg[v]].insert(v);
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  int low = 0;
  for (int step = 0; step < n; ++step) {
    // A removal lowers degrees by one, so the minimum drops by at most one.
    low = std::max(0, low - 1);
    while (bucket[low].empty()) ++low;
    const Vertex v = *bucket[low].begin();
    bucket[low].erase(bucket[low].begin());
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      bucket[deg[w]].erase(w);
      bucket[--deg[w]].insert(w);
    }
  }
  return order;
}

int degeneracy(const Graph& g) {
  const auto order = degeneracy_order(g);
  std::vector<char> removed(g.order(), 0);
  int d = 0;
  for (Vertex v : order) {
    int live = 0;
    for (Vertex w : g.neighbors(v)) live += !removed[w];
    d = std::max(d, live);
    removed[v] = 1;
  }
  return d;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

GraphClassTag classify(const Graph& g) {
  const int n = g.order();
  const auto m = static_cast<long long>(g.num_edges());
  const auto comps = connected_components(g);
  GraphClassTag tag;
  tag.is_connected = comps.size() <= 1;
  tag.is_forest = m == n - static_cast<long long>(comps.size());
  tag.is_tree = tag.is_connected && n >= 1 && m == n - 1;
  tag.is_complete = m == static_cast<long long>(n) * (n - 1) / 2;

  std::vector<int> side(n, -1);
  tag.is_bipartite = true;
  for (const auto& comp : comps) {
    std::queue<Vertex> q;
    side[comp.front()] = 0;
    q.push(comp.front());
    while (!q.empty() && tag.is_bipartite) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          tag.is_bipartite = false;
        }
      }
    }
  }
  return tag;
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw GraphError("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("p must lie in [0, 1]");
  if (p == 0.0) return graphs::empty(n);
  if (p == 1.0) return graphs::complete(n);

  // Geometric skipping over the pair sequence (0,1), (0,2), (1,2), (0,3), ...
  // (column-major, w < v): the gap to the next present pair is geometric with
  // parameter p, which is equivalent to independent Bernoulli(p) draws.
  Rng rng(seed);
  const double log_q = std::log1p(-p);
  std::vector<Edge> edges;
  long long v = 1;
  long long w = -1;
  while (v < n) {
    const double r = rng.uniform01();
    w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.emplace_back(int(w), int(v));
  }
  return Graph(n, edges);
}

ConnectedGraphs::ConnectedGraphs(int n, std::uint64_t shard,
                                 std::uint64_t num_shards)
    : n_(n), mask_(shard), stride_(num_shards) {
  if (n < 1 || n > kMaxOrder) {
    throw LimitError("connected-graph enumeration supports 1 <= n <= " +
                     std::to_string(kMaxOrder));
  }
  if (num_shards == 0 || shard >= num_shards) {
    throw std::invalid_argument("shard must be below num_shards");
  }
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  }
  std::sort(pairs_.begin(), pairs_.end());
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphs::next() {
  while (mask_ < end_) {
    const std::uint64_t mask = mask_;
    mask_ += stride_;
    std::uint32_t adj[kMaxOrder] = {};
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      if ((mask >> b) & 1) {
        adj[pairs_[b].first] |= 1u << pairs_[b].second;
        adj[pairs_[b].second] |= 1u << pairs_[b].first;
      }
    }
    std::uint32_t reached = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
      std::uint32_t grow = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) grow |= adj[std::countr_zero(f)];
      frontier = grow & ~reached;
      reached |= grow;
    }
    if (reached != (1u << n_) - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      if ((mask >> b) & 1) edges.push_back(pairs_[b]);
    }
    return Graph(n_, edges);
  }
  return std::nullopt;
}

std::uint64_t count_connected_graphs(int n) {
  ConnectedGraphs stream(n);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

}  // namespace graphs

}  // namespace grundy
