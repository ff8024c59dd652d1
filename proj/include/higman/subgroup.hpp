#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higman/word.hpp"

namespace higman {

/// Folded core Stallings graph of a finitely generated subgroup of a free
/// group. Vertex 0 is the base; vertices are numbered breadth-first from the
/// base with edges explored in letter order, so equal subgroups give equal
/// graphs.
class SubgroupGraph {
 public:
  struct Edge {
    Letter label;
    int to;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  SubgroupGraph();  // trivial subgroup

  /// `shuffle_seed` permutes the generators and the fold order; the result
  /// does not depend on it.
  static SubgroupGraph of(const std::vector<Word>& gens, std::optional<std::uint64_t> shuffle_seed = {});

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const;  // positively labeled edges
  int rank() const { return num_edges() - num_vertices() + 1; }

  const std::vector<Edge>& edges_at(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::optional<int> follow(int v, const Letter& l) const;

  bool contains(const Word& w) const;

  /// End vertex of the longest prefix of w that can be read from the base,
  /// with that prefix length.
  std::pair<int, std::size_t> trace(const Word& w) const;

  /// Free basis read off a breadth-first spanning tree.
  std::vector<Word> basis() const;

  /// Shortlex-least path words from the base to each vertex.
  const std::vector<Word>& geodesics() const { return geodesic_; }

  /// Shortlex-least element of the right coset H w, and u = w v^-1 in H.
  struct Coset {
    Word u;
    Word rep;
  };
  Coset coset_representative(const Word& w) const;

  friend SubgroupGraph intersect(const SubgroupGraph& a, const SubgroupGraph& b);
  friend bool operator==(const SubgroupGraph& a, const SubgroupGraph& b) { return a.adj_ == b.adj_; }

  std::string describe() const;

 private:
  static SubgroupGraph canonical(int base, const std::vector<std::vector<Edge>>& adj);

  std::vector<std::vector<Edge>> adj_;  // sorted by label
  std::vector<Word> geodesic_;
};

SubgroupGraph intersect(const SubgroupGraph& a, const SubgroupGraph& b);

/// contains() for many words; the parallel version splits the batch over
/// OpenMP threads.
std::vector<bool> contains_batch(const SubgroupGraph& g, const std::vector<Word>& words);
std::vector<bool> contains_batch_serial(const SubgroupGraph& g, const std::vector<Word>& words);

}  // namespace higman
