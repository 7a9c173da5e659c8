#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "srgta/error.hpp"
#include "srgta/permgroup.hpp"

using namespace srgta;

namespace {

Permutation cyc(int n, std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(n, cycles); }

std::vector<Permutation> sym(int n) { return {cyc(n, {{0, 1}}), cyc(n, {[&] {
                                                std::vector<int> c(n);
                                                for (int i = 0; i < n; ++i) c[i] = i;
                                                return c;
                                              }()})}; }

std::vector<Permutation> alt8() { return {cyc(8, {{0, 1, 2}}), cyc(8, {{1, 2, 3, 4, 5, 6, 7}})}; }

std::vector<Permutation> m11() { return {cyc(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}), cyc(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})}; }

// S5 acting on the ten 2-subsets of {0..4}, numbered lexicographically.
std::vector<Permutation> s5_on_pairs() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  auto index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::pair{a, b}) - pairs.begin());
  };
  std::vector<Permutation> out;
  for (const Permutation& s : sym(5)) {
    std::vector<int> img;
    for (auto [a, b] : pairs) img.push_back(index(s(a), s(b)));
    out.emplace_back(img);
  }
  return out;
}

BigInt order_of(const std::vector<Permutation>& gens, int n) { return schreier_sims(gens, n).order(); }

std::uint64_t fixing(const std::vector<Permutation>& elements, std::initializer_list<int> pts) {
  std::uint64_t c = 0;
  for (const auto& g : elements) {
    bool ok = true;
    for (int p : pts) ok &= g(p) == p;
    c += ok;
  }
  return c;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation a = cyc(4, {{0, 1, 2}});
  const Permutation b = cyc(4, {{2, 3}});
  CHECK((a * b)(1) == 3);  // left factor first
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.cycles_str() == "(0 1 2)");
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), Error);
}

TEST_CASE("orbits") {
  const auto g = std::vector<Permutation>{cyc(7, {{0, 1}, {2, 3, 4}})};
  CHECK(orbit(g, 0, 7) == std::vector<int>{0, 1});
  CHECK(orbit(g, 4, 7) == std::vector<int>{2, 3, 4});
  CHECK(orbit(g, 6, 7) == std::vector<int>{6});
  CHECK(orbit_representatives(g, 7) == std::vector<int>{0, 0, 2, 2, 2, 5, 6});
  CHECK(orbit_count(g, 7) == 4);
  CHECK(orbit_count(std::vector<Permutation>{}, 3) == 3);
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Usage;
  };
  CHECK(kind([&] { orbit(g, 7, 7); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind([&] { orbit(g, 0, 8); }) == ErrorKind::DegreeMismatch);
  CHECK(kind([&] { schreier_sims(g, 6); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("group orders") {
  CHECK(order_of(sym(4), 4) == 24);
  CHECK(order_of(sym(8), 8) == 40320);
  CHECK(order_of(alt8(), 8) == 20160);
  CHECK(order_of(m11(), 11) == 7920);
  CHECK(order_of(s5_on_pairs(), 10) == 120);
  CHECK(order_of({}, 5) == 1);
  CHECK(order_of(sym(12), 12) == BigInt(479001600));
}

TEST_CASE("membership") {
  const GroupBSGS a8 = schreier_sims(alt8(), 8);
  CHECK(a8.contains(cyc(8, {{0, 1}, {2, 3}})));
  CHECK_FALSE(a8.contains(cyc(8, {{0, 1}})));
  const GroupBSGS m = schreier_sims(m11(), 11);
  CHECK_FALSE(m.contains(cyc(11, {{0, 1, 2}})));
  for (const auto& g : m.strong_generators()) CHECK(m.contains(g));
}

TEST_CASE("stabilizers against enumeration") {
  for (const auto& [gens, n] : {std::pair{sym(4), 4}, {sym(5), 5}, {s5_on_pairs(), 10}, {alt8(), 8}}) {
    const auto elements = oracle::enumerate_group(gens, n);
    const GroupBSGS g = schreier_sims(gens, n);
    CHECK(g.order() == BigInt(elements.size()));
    for (int w = 0; w < n; ++w) {
      const auto stab = point_stabilizer(g, w);
      CHECK(order_of(stab, n) == BigInt(fixing(elements, {w})));
      for (const auto& s : stab) CHECK(s(w) == w);
      // Orbit-stabilizer.
      CHECK(BigInt(orbit(gens, w, n).size()) * order_of(stab, n) == g.order());
      for (int w2 = (w + 1) % n; w2 != w; w2 = (w2 + 3) % n)
        CHECK(order_of(two_point_stabilizer(g, w, w2), n) == BigInt(fixing(elements, {w, w2})));
    }
  }
  const GroupBSGS m = schreier_sims(m11(), 11);
  CHECK(order_of(point_stabilizer(m, 0), 11) == 720);
  CHECK(order_of(two_point_stabilizer(m, 0, 1), 11) == 72);
}

TEST_CASE("transitivity and rank") {
  auto tr = transitivity_rank(schreier_sims(s5_on_pairs(), 10));
  CHECK(tr.transitive);
  CHECK(tr.rank == 3);
  tr = transitivity_rank(schreier_sims(sym(6), 6));
  CHECK(tr.rank == 2);
  tr = transitivity_rank(schreier_sims(std::vector<Permutation>{cyc(4, {{0, 1}})}, 4));
  CHECK_FALSE(tr.transitive);
  CHECK(tr.rank == 0);
  tr = transitivity_rank(schreier_sims(std::vector<Permutation>{cyc(5, {{0, 1, 2, 3, 4}})}, 5));
  CHECK(tr.rank == 5);
}

TEST_CASE("orbital counts against enumerated pair orbits") {
  const auto gens = s5_on_pairs();
  const GroupBSGS g = schreier_sims(gens, 10);
  const auto stab = point_stabilizer(g, 0);
  const auto elements = oracle::enumerate_group(stab, 10);
  // Vertex 0 is {0,1}; pairs meeting it are its neighbours in J(5,2).
  const std::vector<int> cell0{0}, d1{1, 2, 3, 4, 5, 6}, d2{7, 8, 9};
  const std::vector<std::vector<int>> cells{cell0, d1, d2};
  std::int64_t total = 0;
  for (const auto& a : cells)
    for (const auto& b : cells) {
      const auto ours = orbital_count_block(stab, a, b, 10);
      CHECK(ours == oracle::pair_orbits(elements, a, b));
      CHECK(ours == orbital_count_block(stab, b, a, 10));
      total += ours;
    }
  CHECK(total == 15);
  auto bad = std::vector<int>{1, 7};
  CHECK_THROWS_AS(orbital_count_block(stab, bad, d1, 10), Error);
}

TEST_CASE("generator files round trip") {
  std::ostringstream out;
  write_generators(11, m11(), out);
  std::istringstream in(out.str());
  const GeneratorFile f = read_generators(in);
  CHECK(f.degree == 11);
  CHECK(f.gens == m11());
  CHECK(f.lines == std::vector<int>{2, 3});

  std::istringstream comment("# two points\n2 1\n1 0 # swap\n");
  CHECK(read_generators(comment).gens.front() == cyc(2, {{0, 1}}));
  std::istringstream short_line("3 1\n0 1\n");
  CHECK_THROWS_AS(read_generators(short_line), Error);
  std::istringstream not_perm("3 1\n0 0 1\n");
  CHECK_THROWS_AS(read_generators(not_perm), Error);
  std::istringstream count("3 2\n0 1 2\n");
  CHECK_THROWS_AS(read_generators(count), Error);
}

TEST_CASE("random subgroups of S9 agree with enumeration") {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::vector<Permutation> gens;
    for (int j = 0; j < 2; ++j) {
      std::vector<int> img(9);
      std::iota(img.begin(), img.end(), 0);
      // Shuffle only a prefix so the groups stay small enough to enumerate.
      std::shuffle(img.begin(), img.begin() + 5 + (rng() % 2), rng);
      gens.emplace_back(img);
    }
    CHECK(order_of(gens, 9) == BigInt(oracle::enumerate_group(gens, 9).size()));
  }
}
