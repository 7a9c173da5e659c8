#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "srgta/exactmath.hpp"

namespace srgta {

/// A bijection of {0..n-1}. Products apply the left factor first: (g*h)(x) = h(g(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  /// Throws ParseError unless `images` is a bijection of 0..size-1.
  explicit Permutation(std::vector<int> images);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string cycles_str() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

/// Sorted orbit of `point`. Errors: DegreeMismatch, VertexOutOfRange.
std::vector<int> orbit(std::span<const Permutation> gens, int point, int n);

/// Least point of each point's orbit.
std::vector<int> orbit_representatives(std::span<const Permutation> gens, int n);

int orbit_count(std::span<const Permutation> gens, int n);

/// Base and strong generating set produced by deterministic Schreier-Sims.
class GroupBSGS {
 public:
  int degree() const { return n_; }
  const std::vector<int>& base() const { return base_; }
  const BigInt& order() const { return order_; }

  /// All strong generators; they generate the group.
  const std::vector<Permutation>& strong_generators() const { return pool_; }
  /// Strong generators fixing base[0..depth-1]; these generate that pointwise stabilizer.
  std::vector<Permutation> stabilizer_generators(std::size_t depth) const;
  const std::vector<int>& fundamental_orbit(std::size_t level) const { return levels_[level].orbit; }

  bool contains(const Permutation& g) const;

 private:
  friend GroupBSGS schreier_sims(std::span<const Permutation> gens, int n, std::span<const int> base_prefix);

  struct Level {
    int point = 0;
    std::vector<int> gens;   // indices into pool_
    std::vector<int> orbit;  // in discovery order, starting with point
    std::vector<int> back;   // per point: -2 outside the orbit, -1 the base point, else a pool index
  };

  void rebuild_orbit(Level& lv) const;
  /// g * u^{-1} where u is the transversal element carrying the level's base point to `beta`.
  void strip_step(const Level& lv, int beta, std::vector<int>& g) const;
  /// Sifts g from `from` on; returns the first level where it left the orbit, or levels_.size().
  std::size_t strip(std::vector<int>& g, std::size_t from) const;

  int n_ = 0;
  std::vector<int> base_;
  std::vector<Permutation> pool_;
  std::vector<Permutation> pool_inv_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Errors: DegreeMismatch.
GroupBSGS schreier_sims(std::span<const Permutation> gens, int n, std::span<const int> base_prefix = {});

/// Generators of G_w, by recomputing a BSGS whose base starts at w.
std::vector<Permutation> point_stabilizer(const GroupBSGS& g, int w);
/// Generators of G_w cap G_w2.
std::vector<Permutation> two_point_stabilizer(const GroupBSGS& g, int w, int w2);

struct TransitivityRank {
  bool transitive = false;
  int rank = 0;  // orbits of G_0; 0 when intransitive
};

TransitivityRank transitivity_rank(const GroupBSGS& g);

/// Orbits of <stab_gens> on di x dj. Errors: CellNotInvariant when a generator moves a cell.
std::int64_t orbital_count_block(std::span<const Permutation> stab_gens, std::span<const int> di,
                                 std::span<const int> dj, int n);

struct GeneratorFile {
  int degree = 0;
  std::vector<Permutation> gens;
  std::vector<int> lines;  // source line of each generator
};

GeneratorFile read_generators(std::istream& in);
GeneratorFile read_generators(const std::filesystem::path& path);
void write_generators(int degree, std::span<const Permutation> gens, std::ostream& out);
void write_generators(int degree, std::span<const Permutation> gens, const std::filesystem::path& path);

}  // namespace srgta
