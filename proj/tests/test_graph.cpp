#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "srgta/error.hpp"
#include "srgta/families.hpp"
#include "srgta/graph.hpp"

using namespace srgta;

namespace {

Graph petersen() { return read_graph(std::filesystem::path(SRGTA_SOURCE_DIR) / "tests/data/petersen.graph"); }

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph random_graph(int n, std::mt19937& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) g.add_edge(u, v);
  return g;
}

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

std::vector<Graph> corpus() {
  return {petersen(),      cycle(5),         grid(3),         grid(4),       johnson(5),      johnson(6),
          paley(13),       paley(9),         complete_multipartite(3, 2),    affine_polar(-1, 2, 2),
          grassmann(2, 4), bilinear_forms(2, 2), o6_minus_collinearity(2), disjoint_cliques(3, 3)};
}

}  // namespace

TEST_CASE("is_strongly_regular on the standard examples") {
  CHECK(std::get<SrgParams>(is_strongly_regular(petersen())) == SrgParams{10, 3, 0, 1});
  CHECK(std::get<SrgParams>(is_strongly_regular(cycle(5))) == SrgParams{5, 2, 0, 1});
  CHECK(std::holds_alternative<NotSrg>(is_strongly_regular(path(4))));
  CHECK(std::holds_alternative<NotSrg>(is_strongly_regular(complete_multipartite(4, 1))));  // K4
  CHECK(std::holds_alternative<NotSrg>(is_strongly_regular(Graph(4))));
  CHECK(kind_of([] { require_srg(path(4)); }) == ErrorKind::NotSrg);
}

TEST_CASE("is_strongly_regular agrees with the brute-force tally") {
  for (const Graph& g : corpus()) {
    auto ours = is_strongly_regular(g);
    auto ref = oracle::srg_params(g);
    REQUIRE(ref);
    CHECK(std::get<SrgParams>(ours) == *ref);
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_graph(8, rng);
    auto ref = oracle::srg_params(g);
    auto ours = is_strongly_regular(g);
    const bool degenerate = g.edge_count() == 0 || g.edge_count() == 28;
    if (ref && !degenerate) CHECK(std::get<SrgParams>(ours) == *ref);
    else CHECK(std::holds_alternative<NotSrg>(ours));
  }
}

TEST_CASE("complement") {
  const Graph c = complement(johnson(5));
  CHECK(std::get<SrgParams>(is_strongly_regular(c)) == SrgParams{10, 3, 0, 1});
  for (const Graph& g : corpus()) {
    if (is_srg_wide_sense(g) && !std::holds_alternative<SrgParams>(is_strongly_regular(g))) continue;
    const SrgParams p = require_srg(g);
    CHECK(require_srg(complement(g)) == p.complement());
    CHECK(p.complement() == SrgParams{p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda});
  }
  std::mt19937 rng(17);
  for (int n = 5; n <= 40; ++n)
    for (int t = 0; t < 100; ++t) {
      const Graph g = random_graph(n, rng);
      CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("subconstituents are lambda- and (k-mu)-regular") {
  for (const Graph& g : corpus()) {
    auto r = is_strongly_regular(g);
    if (!std::holds_alternative<SrgParams>(r)) continue;
    const SrgParams p = std::get<SrgParams>(r);
    const Subconstituents s = subconstituents(g, 0);
    CHECK(s.first.order() == p.k);
    CHECK(s.second.order() == p.n - p.k - 1);
    for (int v = 0; v < s.first.order(); ++v) CHECK(s.first.degree(v) == p.lambda);
    for (int v = 0; v < s.second.order(); ++v) CHECK(s.second.degree(v) == p.k - p.mu);
  }
}

TEST_CASE("partition_at") {
  const VertexPartition part = partition_at(petersen(), 0);
  CHECK(part[0].size() == 1);
  CHECK(part.delta1 == std::vector<int>{1, 4, 5});
  CHECK(part.delta2.size() == 6);
  CHECK(kind_of([] { partition_at(petersen(), 10); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("clique extensions") {
  for (const Graph& g : {petersen(), paley(13), grid(3)})
    for (int m : {2, 3}) {
      const Graph e = clique_extension(g, m);
      CHECK(e.order() == m * g.order());
      const int d = g.degree(0);
      for (int v = 0; v < e.order(); ++v) CHECK(e.degree(v) == m - 1 + m * d);
      CHECK(std::holds_alternative<NotSrg>(is_strongly_regular(e)));
    }
  const Graph two_triangles = disjoint_cliques(2, 3);
  const Graph e = clique_extension(two_triangles, 2);
  CHECK(std::get<SrgParams>(is_strongly_regular(e)) == SrgParams{12, 5, 4, 0});
}

TEST_CASE("graph file format") {
  std::istringstream p3("3 2\n0 1\n1 2\n");
  const Graph g = read_graph(p3);
  CHECK(g.order() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));

  std::istringstream commented("# header next\n\n3 1 # one edge\n2 0\n");
  CHECK(read_graph(commented).adjacent(0, 2));

  std::istringstream loop("2 1\n0 0\n");
  CHECK(kind_of([&] { read_graph(loop); }) == ErrorKind::LoopRejected);
  std::istringstream range("2 1\n0 2\n");
  CHECK(kind_of([&] { read_graph(range); }) == ErrorKind::VertexOutOfRange);
  std::istringstream count("3 2\n0 1\n");
  CHECK(kind_of([&] { read_graph(count); }) == ErrorKind::ParseError);
  std::istringstream junk("3 x\n");
  CHECK(kind_of([&] { read_graph(junk); }) == ErrorKind::ParseError);

  for (const Graph& h : corpus()) {
    std::ostringstream out;
    write_graph(h, out);
    std::istringstream in(out.str());
    CHECK(read_graph(in) == h);
  }
  std::ostringstream out;
  write_graph(petersen(), out);
  CHECK(out.str().rfind("10 15\n0 1\n0 4\n0 5\n1 2\n", 0) == 0);
}

TEST_CASE("wide-sense strong regularity") {
  CHECK(is_srg_wide_sense(disjoint_cliques(3, 4)));
  CHECK(is_srg_wide_sense(Graph(5)));
  CHECK(is_srg_wide_sense(complete_multipartite(5, 1)));
  CHECK_FALSE(is_srg_wide_sense(path(4)));
  const PairCounts pc = pair_counts(johnson(5));
  CHECK(pc.adjacent == std::set<int>{3});
  CHECK(pc.nonadjacent == std::set<int>{4});
}
