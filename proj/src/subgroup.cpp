#include "higman/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace higman {

namespace {

struct LetterOrder {
  bool operator()(const Letter& a, const Letter& b) const { return name_less(a, b); }
};

// Mutable graph with union-find folding.
class Folder {
 public:
  int add_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    adj_.emplace_back();
    return parent_.back();
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(int u, const Letter& l, int v) {
    link(u, l, v);
    drain();
  }

  int base_root() { return find(0); }

  /// Live roots and their edges with root endpoints.
  std::map<int, std::vector<SubgroupGraph::Edge>> snapshot() {
    std::map<int, std::vector<SubgroupGraph::Edge>> out;
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
      if (find(v) != v) continue;
      auto& list = out[v];
      for (const auto& [l, t] : adj_[v]) list.push_back({l, find(t)});
    }
    return out;
  }

 private:
  void link(int u, const Letter& l, int v) {
    u = find(u);
    v = find(v);
    if (auto it = adj_[u].find(l); it != adj_[u].end()) {
      pending_.emplace_back(it->second, v);
      return;
    }
    if (auto it = adj_[v].find(l.inv()); it != adj_[v].end()) {
      pending_.emplace_back(it->second, u);
      return;
    }
    adj_[u][l] = v;
    adj_[v][l.inv()] = u;
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (adj_[a].size() < adj_[b].size()) std::swap(a, b);
      auto moved = std::move(adj_[b]);
      adj_[b].clear();
      for (const auto& [l, t] : moved) {
        const int tr = find(t);
        if (tr != b) {
          auto it = adj_[tr].find(l.inv());
          if (it != adj_[tr].end() && find(it->second) == b) adj_[tr].erase(it);
        }
      }
      parent_[b] = a;
      for (const auto& [l, t] : moved) link(a, l, t);
    }
  }

  std::vector<int> parent_;
  std::vector<std::map<Letter, int, LetterOrder>> adj_;
  std::deque<std::pair<int, int>> pending_;
};

}  // namespace

SubgroupGraph::SubgroupGraph() : adj_(1), geodesic_(1) {}

std::optional<int> SubgroupGraph::follow(int v, const Letter& l) const {
  const auto& es = adj_[static_cast<std::size_t>(v)];
  auto it = std::lower_bound(es.begin(), es.end(), l,
                             [](const Edge& e, const Letter& x) { return name_less(e.label, x); });
  if (it == es.end() || it->label != l) return std::nullopt;
  return it->to;
}

int SubgroupGraph::num_edges() const {
  int n = 0;
  for (const auto& es : adj_) {
    for (const auto& e : es) n += e.label.inverse ? 0 : 1;
  }
  return n;
}

SubgroupGraph SubgroupGraph::canonical(int base, const std::vector<std::vector<Edge>>& adj) {
  // prune hanging trees
  std::vector<int> degree(adj.size());
  std::vector<bool> alive(adj.size(), true);
  std::deque<int> leaves;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (static_cast<int>(v) != base && degree[v] <= 1) leaves.push_back(static_cast<int>(v));
  }
  while (!leaves.empty()) {
    const int v = leaves.front();
    leaves.pop_front();
    if (!alive[static_cast<std::size_t>(v)]) continue;
    alive[static_cast<std::size_t>(v)] = false;
    for (const auto& e : adj[static_cast<std::size_t>(v)]) {
      if (!alive[static_cast<std::size_t>(e.to)]) continue;
      if (--degree[static_cast<std::size_t>(e.to)] <= 1 && e.to != base) leaves.push_back(e.to);
    }
  }

  // breadth-first renumbering
  std::vector<int> number(adj.size(), -1);
  std::vector<int> order{base};
  number[static_cast<std::size_t>(base)] = 0;
  SubgroupGraph g;
  g.geodesic_.assign(1, Word{});
  std::vector<Word> paths{Word{}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    auto es = adj[static_cast<std::size_t>(v)];
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return name_less(a.label, b.label); });
    for (const auto& e : es) {
      if (!alive[static_cast<std::size_t>(e.to)] || number[static_cast<std::size_t>(e.to)] >= 0) continue;
      number[static_cast<std::size_t>(e.to)] = static_cast<int>(order.size());
      order.push_back(e.to);
      paths.push_back(paths[head] * Word({e.label}));
    }
  }
  g.adj_.assign(order.size(), {});
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& e : adj[static_cast<std::size_t>(order[i])]) {
      if (!alive[static_cast<std::size_t>(e.to)]) continue;
      g.adj_[i].push_back({e.label, number[static_cast<std::size_t>(e.to)]});
    }
    std::sort(g.adj_[i].begin(), g.adj_[i].end(),
              [](const Edge& a, const Edge& b) { return name_less(a.label, b.label); });
  }
  g.geodesic_ = std::move(paths);
  return g;
}

SubgroupGraph SubgroupGraph::of(const std::vector<Word>& gens, std::optional<std::uint64_t> shuffle_seed) {
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

  Folder f;
  f.add_vertex();
  for (auto gi : order) {
    const Word& w = gens[gi];
    if (w.empty()) continue;
    // optionally read the generator backwards (as its inverse) to vary folds
    const bool flip = shuffle_seed && (rng() & 1);
    const Word petal = flip ? w.inverse() : w;
    int cur = 0;
    for (std::size_t i = 0; i < petal.size(); ++i) {
      const int next = i + 1 == petal.size() ? 0 : f.add_vertex();
      f.add_edge(cur, petal[i], next);
      cur = next;
    }
  }
  const auto snap = f.snapshot();
  std::map<int, int> index;
  std::vector<std::vector<Edge>> adj;
  for (const auto& [v, es] : snap) {
    index[v] = static_cast<int>(adj.size());
    adj.emplace_back();
  }
  for (const auto& [v, es] : snap) {
    for (const auto& e : es) adj[static_cast<std::size_t>(index[v])].push_back({e.label, index[e.to]});
  }
  return canonical(index[f.base_root()], adj);
}

std::pair<int, std::size_t> SubgroupGraph::trace(const Word& w) const {
  int v = 0;
  std::size_t i = 0;
  for (; i < w.size(); ++i) {
    auto next = follow(v, w[i]);
    if (!next) break;
    v = *next;
  }
  return {v, i};
}

bool SubgroupGraph::contains(const Word& w) const {
  const auto [v, n] = trace(w);
  return n == w.size() && v == 0;
}

std::vector<Word> SubgroupGraph::basis() const {
  std::vector<Word> out;
  for (int v = 0; v < num_vertices(); ++v) {
    for (const auto& e : adj_[static_cast<std::size_t>(v)]) {
      if (e.label.inverse) continue;
      const Word via = geodesic_[static_cast<std::size_t>(v)] * Word({e.label});
      if (via == geodesic_[static_cast<std::size_t>(e.to)]) continue;
      out.push_back(via * geodesic_[static_cast<std::size_t>(e.to)].inverse());
    }
  }
  return out;
}

SubgroupGraph::Coset SubgroupGraph::coset_representative(const Word& w) const {
  const auto [v, n] = trace(w);
  const Word rep = geodesic_[static_cast<std::size_t>(v)] * w.slice(n, w.size() - n);
  return {w * rep.inverse(), rep};
}

SubgroupGraph intersect(const SubgroupGraph& a, const SubgroupGraph& b) {
  std::map<std::pair<int, int>, int> index{{{0, 0}, 0}};
  std::vector<std::pair<int, int>> order{{0, 0}};
  std::vector<std::vector<SubgroupGraph::Edge>> adj(1);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto [u, v] = order[head];
    for (const auto& e : a.edges_at(u)) {
      auto t = b.follow(v, e.label);
      if (!t) continue;
      const std::pair<int, int> key{e.to, *t};
      auto [it, fresh] = index.emplace(key, static_cast<int>(order.size()));
      if (fresh) {
        order.push_back(key);
        adj.emplace_back();
      }
      adj[head].push_back({e.label, it->second});
    }
  }
  return SubgroupGraph::canonical(0, adj);
}

std::string SubgroupGraph::describe() const {
  std::ostringstream os;
  os << "vertices " << num_vertices() << ", edges " << num_edges() << ", rank " << rank() << "\n";
  for (int v = 0; v < num_vertices(); ++v) {
    for (const auto& e : adj_[static_cast<std::size_t>(v)]) {
      if (e.label.inverse) continue;
      os << "  " << v << " -" << gen_name(e.label.gen) << "-> " << e.to << "\n";
    }
  }
  return os.str();
}

std::vector<bool> contains_batch_serial(const SubgroupGraph& g, const std::vector<Word>& words) {
  std::vector<bool> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = g.contains(words[i]);
  return out;
}

std::vector<bool> contains_batch(const SubgroupGraph& g, const std::vector<Word>& words) {
  std::vector<char> hits(words.size());
  const auto n = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) hits[static_cast<std::size_t>(i)] = g.contains(words[static_cast<std::size_t>(i)]);
  return {hits.begin(), hits.end()};
}

}  // namespace higman
