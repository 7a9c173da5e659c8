#include <doctest.h>

#include "oracles.hpp"
#include "srgta/autgrp.hpp"
#include "srgta/classifier.hpp"
#include "srgta/error.hpp"
#include "srgta/families.hpp"
#include "srgta/terwilliger.hpp"

using namespace srgta;

namespace {

Graph petersen() { return read_graph(std::filesystem::path(SRGTA_SOURCE_DIR) / "tests/data/petersen.graph"); }

std::int64_t oracle_t0(const Graph& g) {
  std::int64_t c = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c += oracle::intersection_number(g, i, j, k) != 0;
  return c;
}

// Dimension of the centralizer of G_omega: its orbits on ordered pairs, from the element list.
std::pair<std::int64_t, Block3> oracle_t_tilde(const Graph& g, int omega) {
  const auto gens = automorphism_group(g).gens;
  std::vector<Permutation> stab;
  for (const auto& x : oracle::enumerate_group(gens, g.order()))
    if (x(omega) == omega) stab.push_back(x);
  const VertexPartition part = partition_at(g, omega);
  Block3 b{};
  std::int64_t total = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) total += b[i][j] = oracle::pair_orbits(stab, part[i], part[j]);
  return {total, b};
}

std::vector<Graph> small_corpus() {
  return {petersen(), cycle(5), paley(9), paley(13), grid(3), grid(4), affine_polar(-1, 2, 2), johnson(6),
          complete_multipartite(3, 3), complete_multipartite(2, 4)};
}

}  // namespace

TEST_CASE("dual idempotents") {
  const Idempotents e = idempotents(petersen(), 0);
  CHECK(e.trace(0) == 1);
  CHECK(e.trace(1) == 3);
  CHECK(e.trace(2) == 6);
  const auto m = e.matrix(1);
  CHECK(m[1 * 10 + 1] == 1);
  CHECK(m[2 * 10 + 2] == 0);
  CHECK_THROWS_AS(idempotents(petersen(), 10), Error);
}

TEST_CASE("Petersen graph") {
  const Graph g = petersen();
  const DimBlocks t0 = t0_report(g, 0);
  const DimBlocks t = t_report(g, 0);
  const TTildeReport tt = t_tilde_report(g, automorphism_group(g).gens, 0);
  CHECK(t0.dim == 14);
  CHECK(t.dim == 15);
  CHECK(tt.dims.dim == 15);
  CHECK(t0.blocks == Block3{{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}});
  CHECK(tt.dims.blocks == Block3{{{1, 1, 1}, {1, 2, 2}, {1, 2, 4}}});
  CHECK(tt.orbit_formula_total == 15);
  CHECK(tt.transitive);
  CHECK(tt.rank == 3);
  CHECK(tt.order == 120);
}

TEST_CASE("T0 against counted intersection numbers") {
  for (const Graph& g : small_corpus()) {
    const DimBlocks t0 = t0_report(g, 0);
    CHECK(t0.dim == oracle_t0(g));
    CHECK(block_sum(t0.blocks) == t0.dim);
  }
}

TEST_CASE("T~ against enumerated stabilizers") {
  for (const Graph& g : small_corpus()) {
    const auto [total, blocks] = oracle_t_tilde(g, 0);
    const TTildeReport tt = t_tilde_report(g, automorphism_group(g).gens, 0);
    CHECK(tt.dims.dim == total);
    CHECK(tt.dims.blocks == blocks);
    CHECK(tt.orbit_formula_total == total);
  }
}

TEST_CASE("T0 <= T <= T~ and the spectral estimate of T") {
  for (const Graph& g : small_corpus()) {
    if (t0_case(require_srg(g)) == T0Case::Imprimitive) continue;
    const auto t0 = t0_report(g, 0).dim;
    const auto t = t_report(g, 0).dim;
    const auto tt = t_tilde_report(g, automorphism_group(g).gens, 0).dims.dim;
    CHECK(t0 <= t);
    CHECK(t <= tt);
    const SpectralCheck s = t_dim_spectral_crosscheck(g, 0);
    if (s.conclusive) CHECK(s.dim == t);
  }
}

TEST_CASE("substrates agree") {
  AlgebraOptions rational;
  rational.rational = true;
  AlgebraOptions other;
  other.prime = 1000003;
  other.second_prime = 998244353;
  for (const Graph& g : {petersen(), cycle(5), paley(13)}) {
    const DimBlocks a = t_report(g, 0);
    CHECK(t_report(g, 0, rational).blocks == a.blocks);
    CHECK(t_report(g, 0, other).blocks == a.blocks);
    CHECK(t0_report(g, 0, rational).dim == t0_report(g, 0).dim);
  }
}

TEST_CASE("known dimensions") {
  CHECK(t_report(cycle(5), 0).dim == 13);
  CHECK(t_report(affine_polar(-1, 2, 2), 0).dim == 14);
  CHECK(t_report(grid(5), 0).dim == 15);
  CHECK(t_report(complete_multipartite(3, 3), 0).dim == 12);
  CHECK(t_report(complete_multipartite(2, 3), 0).dim == 11);
  CHECK(t_report(paley(13), 0).dim == 21);
  CHECK(t_report(paley(17), 0).dim == 25);
}

TEST_CASE("closure guard") {
  AlgebraOptions small;
  small.closure_guard = 9;
  CHECK_THROWS_AS(t_report(petersen(), 0, small), Error);
}
