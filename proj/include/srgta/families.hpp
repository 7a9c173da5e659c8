#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srgta/graph.hpp"

namespace srgta {

/// `parts` classes of `size` vertices each; vertex v lies in class v / size.
Graph complete_multipartite(int parts, int size);
/// `count` disjoint copies of K_size.
Graph disjoint_cliques(int count, int size);
Graph cycle(int n);
/// The n x n rook's graph; vertex (r, c) is r*n + c.
Graph grid(int n);
/// J(n,2): 2-subsets of {0..n-1} in lexicographic order, adjacent when they meet.
Graph johnson(int n);
/// J_q(n,2): lines of PG(n-1,q) numbered by their reduced echelon 2 x n basis, adjacent when they meet.
Graph grassmann(std::uint64_t q, int n);
Graph paley(std::uint64_t q);
/// P*(p^{2t}), the Cayley graph on GF(p^{2t}) with connection set <w^4> u w<w^4>.
Graph peisert(std::uint64_t p, int t);
/// VO^eps_{2m}(q). Vectors of GF(q)^{2m} are numbered in mixed radix, first coordinate least significant.
Graph affine_polar(int eps, int m, std::uint64_t q);
/// Isotropic points of the elliptic quadric in PG(5,q), adjacent when perpendicular.
Graph o6_minus_collinearity(std::uint64_t q);
/// H_q(2,e): 2 x e matrices over GF(q), adjacent when the difference has rank one.
Graph bilinear_forms(std::uint64_t q, int e);

/// A family tag and its integer arguments, as typed on the command line.
struct FamilySpec {
  std::string tag;
  std::vector<long long> args;

  std::string str() const;
};

/// Tags: multipartite, cliques, cycle, grid, johnson, grassmann, paley, peisert, vo, o6minus, bilinear.
Graph construct(const FamilySpec& spec);

const std::vector<std::string>& family_tags();

}  // namespace srgta
