#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "srgta/graph.hpp"
#include "srgta/permgroup.hpp"

namespace srgta {

/// An ordered partition of the vertex set, stored nauty-style: cells are contiguous
/// runs of `lab`, identified by their start position.
struct ColoredPartition {
  std::vector<int> lab;   // vertices in cell order
  std::vector<int> cell;  // per vertex: start position of its cell
  std::vector<int> len;   // per start position: cell length (0 elsewhere)
  int cells = 0;

  static ColoredPartition unit(int n);
  /// Cells given by equal values of `colour`, ordered by colour.
  static ColoredPartition from_colours(const std::vector<int>& colour);

  bool discrete() const { return cells == static_cast<int>(lab.size()); }
  /// Cells as vertex sets, in order.
  std::vector<std::vector<int>> cell_list() const;
};

/// Coarsest equitable refinement (1-dimensional Weisfeiler-Leman) of `p`.
ColoredPartition refine(const Graph& g, const ColoredPartition& p);

bool is_automorphism(const Graph& g, const Permutation& perm);

struct AutOptions {
  std::chrono::milliseconds timeout{300'000};
};

struct AutResult {
  std::vector<Permutation> gens;
  bool complete = true;  // false when the search timed out; gens then generate a subgroup
  std::uint64_t nodes = 0;
};

/// Generators of Aut(g) by individualization-refinement with first-path anchoring and
/// orbit pruning. Every returned generator is verified. Errors: SizeGuardExceeded.
AutResult automorphism_group(const Graph& g, const AutOptions& opts = {});

/// Reads a generator file and verifies each permutation against g.
/// Errors: DegreeMismatch, NotAnAutomorphism, ParseError.
std::vector<Permutation> import_generators(const std::filesystem::path& path, const Graph& g);
std::vector<Permutation> import_generators(std::istream& in, const Graph& g);

}  // namespace srgta
