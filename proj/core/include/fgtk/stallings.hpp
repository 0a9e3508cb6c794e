#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fgtk/word.hpp"

namespace fgtk {

struct GraphEdge {
  std::int32_t src;
  std::int32_t dst;
  std::int32_t label;  // 1..rank

  auto operator<=>(const GraphEdge&) const = default;
};

/// Folded core graph of a finitely generated subgroup of a free group, with
/// a base vertex. Built by wedging loops for the generators, folding until
/// no vertex carries two equal-label edges in the same direction, and
/// trimming non-base vertices of degree < 2. Vertices are relabeled by a
/// breadth-first traversal from the base (labels ascending, outgoing before
/// incoming), so equal subgroups yield identical representations and the
/// base is always vertex 0.
class StallingsGraph {
 public:
  static StallingsGraph build(const std::vector<Word>& generators, std::int32_t rank);
  static StallingsGraph build(const WordTuple& tuple);

  std::int32_t vertex_count() const { return vertex_count_; }
  std::int32_t base() const { return 0; }
  std::int32_t ambient_rank() const { return rank_; }

  /// Geometric edges, sorted by (src, dst, label).
  const std::vector<GraphEdge>& edges() const { return edges_; }

  /// Membership of the subgroup: the word traces a closed path at the base.
  bool contains(const Word& w) const;

  /// Graph rank |E| - |V| + 1, the rank of the subgroup.
  std::int32_t subgroup_rank() const;

  /// Free basis read off a breadth-first spanning tree: one word per
  /// non-tree edge, in deterministic scan order.
  std::vector<Word> basis() const;

  /// True when every vertex has an outgoing and incoming edge for every
  /// label; equivalent to the subgroup having finite index. Diagnostic only.
  bool is_complete() const;

  bool operator==(const StallingsGraph& other) const;

  /// {"vertices": V, "base": 0, "edges": [[src, dst, label], ...]}
  std::string to_json() const;

 private:
  StallingsGraph(std::int32_t rank, std::int32_t vertex_count, std::vector<GraphEdge> edges);

  std::int32_t out_slot(std::int32_t v, std::int32_t label) const;
  std::int32_t in_slot(std::int32_t v, std::int32_t label) const;

  std::int32_t rank_ = 1;
  std::int32_t vertex_count_ = 1;
  std::vector<GraphEdge> edges_;
  // Folded adjacency: at most one edge per (vertex, label, direction).
  std::vector<std::int32_t> out_;  // vertex * rank + (label-1) -> head or -1
  std::vector<std::int32_t> in_;   // vertex * rank + (label-1) -> tail or -1
};

}  // namespace fgtk
