#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "srgta/exactmath.hpp"
#include "srgta/graph.hpp"
#include "srgta/permgroup.hpp"

namespace srgta {

using Block3 = std::array<std::array<std::int64_t, 3>, 3>;

std::int64_t block_sum(const Block3& b);
std::string block_str(const Block3& b);

/// Scalar substrate for the span and closure computations.
struct AlgebraOptions {
  std::uint64_t prime = kDefaultPrime;
  /// Second modulus for the agreement check; 0 derives one from `seed`.
  std::uint64_t second_prime = 0;
  std::uint64_t seed = 1;
  bool two_primes = true;
  bool rational = false;
  /// T is only computed up to this many vertices.
  std::int64_t closure_guard = 1500;
};

/// E*_0, E*_1, E*_2 for a base vertex, as diagonal indicator vectors.
struct Idempotents {
  VertexPartition part;
  std::array<std::vector<std::int64_t>, 3> diag;

  std::int64_t trace(int i) const;
  /// Row-major n x n matrix of E*_i.
  std::vector<std::int64_t> matrix(int i) const;
};

/// Errors: NotSrg, VertexOutOfRange.
Idempotents idempotents(const Graph& g, int omega);

struct DimBlocks {
  std::int64_t dim = 0;
  Block3 blocks{};
};

/// Span of the 27 products E*_i A_j E*_k. Errors: NotSrg, OracleMismatch, PrimeDisagreement.
DimBlocks t0_report(const Graph& g, int omega, const AlgebraOptions& opts = {});

/// The algebra generated by I, A_1, A_2, E*_0, E*_1, E*_2.
/// Errors: NotSrg, ClosureBudgetExceeded, SizeGuardExceeded, PrimeDisagreement.
DimBlocks t_report(const Graph& g, int omega, const AlgebraOptions& opts = {});

struct TTildeReport {
  DimBlocks dims;
  /// Sum over representatives x of the G_omega-orbits of the number of orbits of G_omega cap G_x.
  std::int64_t orbit_formula_total = 0;
  bool transitive = false;
  int rank = 0;
  BigInt order = 1;
};

/// Centralizer algebra of the stabilizer of omega in <gens>, by orbital counting.
/// Errors: NotSrg, InternalDisagreement (block total differs from the orbit formula).
TTildeReport t_tilde_report(const Graph& g, std::span<const Permutation> gens, int omega);

struct SpectralCheck {
  bool conclusive = false;
  std::int64_t dim = 0;  // m1 + m2 + 4 n1 + 9
  int m1 = 0, m2 = 0, n1 = 0, n2 = 0;
};

/// Floating-point estimate of dim T from the subconstituent spectra. Advisory only.
/// Errors: NotSrg.
SpectralCheck t_dim_spectral_crosscheck(const Graph& g, int omega);

struct ReportFlags {
  bool aut_lower_bound_only = false;  // the search timed out; |Aut| is a lower bound
  bool aut_imported = false;          // generators came from a file and were only verified
  bool case_b_candidate = false;      // Aut is intransitive; no verdict is issued

  friend bool operator==(const ReportFlags&, const ReportFlags&) = default;
};

/// One analysis of one graph at one base vertex.
struct AlgebraReport {
  std::string name;
  SrgParams params;
  int omega = 0;
  std::int64_t t0 = 0, t = 0, t_tilde = 0;
  Block3 t0_blocks{}, t_blocks{}, t_tilde_blocks{};
  std::int64_t r1 = 0, r2 = 0, t_offdiag = 0;
  bool transitive = false;
  int rank = 0;
  bool rank3 = false;
  bool triply_regular = false;
  std::optional<bool> triply_transitive;  // empty when no verdict applies
  BigInt aut_order = 1;
  ReportFlags flags;

  friend bool operator==(const AlgebraReport&, const AlgebraReport&) = default;
};

nlohmann::json to_json(const AlgebraReport& r);
AlgebraReport report_from_json(const nlohmann::json& j);

/// One row in the layout "params | name | |Aut| | T0 | T | T~ | blocks of T~".
std::string table_row(const AlgebraReport& r);
std::string table_header();

}  // namespace srgta
