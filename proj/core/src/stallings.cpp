#include "fgtk/stallings.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace fgtk {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  // Keeps the smaller root so the base vertex (0) survives every merge.
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
  }
};

using RawEdge = std::tuple<std::int32_t, std::int32_t, std::int32_t>;  // src, dst, label

// Merges endpoints until no vertex carries two equal-label edges in the same
// direction, then returns the deduplicated edge set.
std::set<RawEdge> fold(UnionFind& dsu, const std::vector<RawEdge>& raw) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> out_map, in_map;
    for (const auto& [s0, d0, label] : raw) {
      std::int32_t s = dsu.find(s0);
      std::int32_t d = dsu.find(d0);
      auto [out_it, out_new] = out_map.try_emplace({s, label}, d);
      if (!out_new && dsu.find(out_it->second) != d) {
        dsu.unite(dsu.find(out_it->second), d);
        changed = true;
        break;
      }
      auto [in_it, in_new] = in_map.try_emplace({d, label}, s);
      if (!in_new && dsu.find(in_it->second) != s) {
        dsu.unite(dsu.find(in_it->second), s);
        changed = true;
        break;
      }
    }
  }
  std::set<RawEdge> folded;
  for (const auto& [s, d, label] : raw) folded.insert({dsu.find(s), dsu.find(d), label});
  return folded;
}

// Removes non-base vertices of degree < 2 (and their edges) until stable.
void trim(std::set<RawEdge>& edges, std::int32_t base) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::int32_t, int> degree;
    for (const auto& [s, d, label] : edges) {
      ++degree[s];
      ++degree[d];
    }
    for (const auto& [vertex, deg] : degree) {
      if (vertex == base || deg >= 2) continue;
      for (auto it = edges.begin(); it != edges.end();) {
        if (std::get<0>(*it) == vertex || std::get<1>(*it) == vertex)
          it = edges.erase(it);
        else
          ++it;
      }
      changed = true;
      break;
    }
  }
}

}  // namespace

StallingsGraph::StallingsGraph(std::int32_t rank, std::int32_t vertex_count,
                               std::vector<GraphEdge> edges)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  const std::size_t slots =
      static_cast<std::size_t>(vertex_count_) * static_cast<std::size_t>(rank_);
  out_.assign(slots, -1);
  in_.assign(slots, -1);
  for (const GraphEdge& e : edges_) {
    out_[static_cast<std::size_t>(out_slot(e.src, e.label))] = e.dst;
    in_[static_cast<std::size_t>(in_slot(e.dst, e.label))] = e.src;
  }
}

std::int32_t StallingsGraph::out_slot(std::int32_t v, std::int32_t label) const {
  return v * rank_ + (label - 1);
}

std::int32_t StallingsGraph::in_slot(std::int32_t v, std::int32_t label) const {
  return v * rank_ + (label - 1);
}

StallingsGraph StallingsGraph::build(const std::vector<Word>& generators, std::int32_t rank) {
  if (rank < 1) throw Error(ErrorKind::InvalidLetter, "rank must be at least 1");
  for (const Word& w : generators)
    if (w.rank() != rank)
      throw Error(ErrorKind::RankMismatch, "generator rank differs from the ambient rank");

  // Wedge of loops at the base vertex, one loop per nonempty generator.
  std::int32_t next_vertex = 1;
  std::vector<RawEdge> raw;
  for (const Word& w : generators) {
    if (w.empty()) continue;
    std::int32_t current = 0;
    const auto& letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      std::int32_t target = (i + 1 == letters.size()) ? 0 : next_vertex++;
      std::int32_t letter = letters[i];
      if (letter > 0)
        raw.push_back({current, target, letter});
      else
        raw.push_back({target, current, -letter});
      current = target;
    }
  }

  UnionFind dsu(static_cast<std::size_t>(next_vertex));
  std::set<RawEdge> folded = fold(dsu, raw);
  trim(folded, dsu.find(0));

  // Canonical relabeling: breadth-first from the base, labels ascending,
  // outgoing before incoming at each vertex.
  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> out_adj, in_adj;
  for (const auto& [s, d, label] : folded) {
    out_adj[{s, label}] = d;
    in_adj[{d, label}] = s;
  }
  std::int32_t base = dsu.find(0);
  std::map<std::int32_t, std::int32_t> relabel{{base, 0}};
  std::vector<std::int32_t> order{base};
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::int32_t v = order[head];
    for (std::int32_t label = 1; label <= rank; ++label) {
      if (auto it = out_adj.find({v, label}); it != out_adj.end() && !relabel.count(it->second)) {
        relabel[it->second] = static_cast<std::int32_t>(order.size());
        order.push_back(it->second);
      }
      if (auto it = in_adj.find({v, label}); it != in_adj.end() && !relabel.count(it->second)) {
        relabel[it->second] = static_cast<std::int32_t>(order.size());
        order.push_back(it->second);
      }
    }
  }

  std::vector<GraphEdge> edges;
  edges.reserve(folded.size());
  for (const auto& [s, d, label] : folded)
    edges.push_back(GraphEdge{relabel.at(s), relabel.at(d), label});
  return StallingsGraph(rank, static_cast<std::int32_t>(order.size()), std::move(edges));
}

StallingsGraph StallingsGraph::build(const WordTuple& tuple) {
  return build(tuple.words, tuple.rank);
}

bool StallingsGraph::contains(const Word& w) const {
  if (w.rank() != rank_)
    throw Error(ErrorKind::RankMismatch, "word rank differs from the graph's ambient rank");
  std::int32_t v = 0;
  for (std::int32_t letter : w.letters()) {
    if (letter > 0)
      v = out_[static_cast<std::size_t>(out_slot(v, letter))];
    else
      v = in_[static_cast<std::size_t>(in_slot(v, -letter))];
    if (v < 0) return false;
  }
  return v == 0;
}

std::int32_t StallingsGraph::subgroup_rank() const {
  return static_cast<std::int32_t>(edges_.size()) - vertex_count_ + 1;
}

std::vector<Word> StallingsGraph::basis() const {
  // Scanning vertices in numeric order replays the canonical BFS, so tree
  // edges are exactly the first-discovery edges.
  std::vector<bool> visited(static_cast<std::size_t>(vertex_count_), false);
  visited[0] = true;
  std::vector<Word> paths(static_cast<std::size_t>(vertex_count_), Word(rank_));
  std::vector<Word> words;
  std::set<GraphEdge> tree;
  for (std::int32_t v = 0; v < vertex_count_; ++v) {
    for (std::int32_t label = 1; label <= rank_; ++label) {
      std::int32_t w = out_[static_cast<std::size_t>(out_slot(v, label))];
      if (w >= 0 && !visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = true;
        paths[static_cast<std::size_t>(w)] =
            concat(paths[static_cast<std::size_t>(v)], Word::from_letter(label, rank_));
        tree.insert(GraphEdge{v, w, label});
      }
      std::int32_t u = in_[static_cast<std::size_t>(in_slot(v, label))];
      if (u >= 0 && !visited[static_cast<std::size_t>(u)]) {
        visited[static_cast<std::size_t>(u)] = true;
        paths[static_cast<std::size_t>(u)] =
            concat(paths[static_cast<std::size_t>(v)], Word::from_letter(-label, rank_));
        tree.insert(GraphEdge{u, v, label});
      }
    }
  }
  // Second pass in the same order: each non-tree edge yields one basis word,
  // collected at its first encounter.
  std::set<GraphEdge> emitted;
  for (std::int32_t v = 0; v < vertex_count_; ++v) {
    for (std::int32_t label = 1; label <= rank_; ++label) {
      std::int32_t w = out_[static_cast<std::size_t>(out_slot(v, label))];
      if (w >= 0) {
        GraphEdge e{v, w, label};
        if (!tree.count(e) && emitted.insert(e).second)
          words.push_back(concat(concat(paths[static_cast<std::size_t>(v)],
                                        Word::from_letter(label, rank_)),
                                 paths[static_cast<std::size_t>(w)].inverse()));
      }
      std::int32_t u = in_[static_cast<std::size_t>(in_slot(v, label))];
      if (u >= 0) {
        GraphEdge e{u, v, label};
        if (!tree.count(e) && emitted.insert(e).second)
          words.push_back(concat(concat(paths[static_cast<std::size_t>(u)],
                                        Word::from_letter(label, rank_)),
                                 paths[static_cast<std::size_t>(v)].inverse()));
      }
    }
  }
  return words;
}

bool StallingsGraph::is_complete() const {
  for (std::int32_t v = 0; v < vertex_count_; ++v)
    for (std::int32_t label = 1; label <= rank_; ++label)
      if (out_[static_cast<std::size_t>(out_slot(v, label))] < 0 ||
          in_[static_cast<std::size_t>(in_slot(v, label))] < 0)
        return false;
  return true;
}

bool StallingsGraph::operator==(const StallingsGraph& other) const {
  return rank_ == other.rank_ && vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
}

std::string StallingsGraph::to_json() const {
  std::ostringstream out;
  out << "{\"vertices\":" << vertex_count_ << ",\"base\":0,\"edges\":[";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0) out << ",";
    out << "[" << edges_[i].src << "," << edges_[i].dst << "," << edges_[i].label << "]";
  }
  out << "]}";
  return out.str();
}

}  // namespace fgtk
