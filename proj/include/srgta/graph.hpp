#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "srgta/params.hpp"

namespace srgta {

/// Undirected simple graph on 0..n-1 stored as a symmetric bit matrix.
class Graph {
 public:
  using Word = std::uint64_t;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int words() const { return w_; }

  bool adjacent(int u, int v) const { return (rows_[idx(u) + (v >> 6)] >> (v & 63)) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  const Word* row(int u) const { return rows_.data() + idx(u); }
  int degree(int u) const;
  int common_neighbours(int u, int v) const;
  std::vector<int> neighbours(int u) const;
  std::int64_t edge_count() const;

  /// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t idx(int u) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(w_); }

  int n_ = 0;
  int w_ = 0;
  std::vector<Word> rows_;
};

/// First witness against strong regularity.
struct NotSrg {
  int u = -1;
  int v = -1;
  std::string reason;
};

/// (n,k,lambda,mu) when g is a strongly regular graph; complete and empty graphs are rejected.
std::variant<SrgParams, NotSrg> is_strongly_regular(const Graph& g);

/// SrgParams or throws Error(NotSrg).
SrgParams require_srg(const Graph& g);

/// Distinct degrees and distinct common-neighbour counts over adjacent and non-adjacent pairs.
struct PairCounts {
  std::set<int> degrees;
  std::set<int> adjacent;
  std::set<int> nonadjacent;
  int first_u = -1;  // first pair at which a second distinct count appeared
  int first_v = -1;
};

PairCounts pair_counts(const Graph& g);

/// Regular with constant lambda and mu wherever the pair class is nonempty.
/// Accepts complete graphs, empty graphs and disjoint unions of equal cliques.
bool is_srg_wide_sense(const Graph& g);

Graph complement(const Graph& g);

/// The three cells around a base vertex: {omega}, its neighbours, its non-neighbours.
struct VertexPartition {
  int omega = 0;
  std::vector<int> delta1;
  std::vector<int> delta2;
  std::vector<int> cell;  // per vertex: 0, 1 or 2

  std::span<const int> operator[](int i) const;

 private:
  std::vector<int> delta0_;
  friend VertexPartition partition_at(const Graph& g, int omega);
};

VertexPartition partition_at(const Graph& g, int omega);

struct Subconstituents {
  Graph first;
  Graph second;
  VertexPartition part;
};

Subconstituents subconstituents(const Graph& g, int omega);

/// Vertices (i,u) numbered i*n + u; (i,u) ~ (j,v) iff u ~ v, or u = v and i != j.
Graph clique_extension(const Graph& g, int m);

Graph read_graph(std::istream& in);
Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph(const Graph& g, const std::filesystem::path& path);

/// `fallback` unless SRGTA_SIZE_GUARD holds a positive integer, which then replaces it.
std::int64_t size_guard(std::int64_t fallback);

}  // namespace srgta
