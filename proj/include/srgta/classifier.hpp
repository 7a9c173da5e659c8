#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "srgta/autgrp.hpp"
#include "srgta/exactmath.hpp"
#include "srgta/graph.hpp"
#include "srgta/params.hpp"
#include "srgta/permgroup.hpp"
#include "srgta/terwilliger.hpp"

namespace srgta {

/// p_ij^k for relations 0 (equal), 1 (adjacent), 2 (non-adjacent).
struct IntersectionNumbers {
  std::array<std::array<std::array<std::int64_t, 3>, 3>, 3> p{};  // p[i][j][k] = p_ij^k

  std::int64_t operator()(int i, int j, int k) const { return p[i][j][k]; }
  int nonzero_count() const;
  /// Entry (i,k) counts the j with p_ij^k != 0: the block dimensions of T0.
  Block3 t0_blocks() const;
};

/// Errors: InconsistentParams.
IntersectionNumbers intersection_numbers(const SrgParams& p);

/// Which of the four shapes of T0 applies, by primitivity and triangles.
enum class T0Case { Imprimitive, BothTriangleFree, GraphTriangleFree, ComplementTriangleFree, BothTriangles };

T0Case t0_case(const SrgParams& p);
std::string to_string(T0Case c);

/// True when `blocks` is one of the block templates for the case of p. In the imprimitive
/// case the roles of the two cells may be exchanged, and entries are capped by the number
/// of matrix positions when a cell is a single vertex.
bool t0_template_matches(const SrgParams& p, const Block3& blocks);

struct KreinReport {
  QuadExt theta, tau;
  QuadExt f, g;  // multiplicities of theta and tau
  QuadExt q11_paper, q22_paper;
  QuadExt q11_oracle, q22_oracle;
  int sign11 = 0, sign22 = 0;  // of the oracle values
  /// The displayed polynomials have the same signs as the oracle values.
  bool agree = false;
};

/// Errors: InconsistentParams, ImprimitiveParams.
KreinReport krein(const SrgParams& p);

struct ParamForm {
  enum class Tag { LatinSquare, NegativeLatinSquare, FourTSquare, RSpecial, Grid, Smith };
  Tag tag;
  std::int64_t a = 0;  // m, t, r or the grid side
  std::int64_t b = 0;  // n for LS/nLS, the sign for FourTSquare
  QuadExt theta, tau;  // Smith only

  std::string str() const;
  friend bool operator==(const ParamForm& x, const ParamForm& y) {
    return x.tag == y.tag && x.a == y.a && x.b == y.b && x.theta == y.theta && x.tau == y.tau;
  }
};

/// Every matching form with its witnesses. Errors: InconsistentParams.
std::vector<ParamForm> param_form(const SrgParams& p);
bool has_form(const std::vector<ParamForm>& forms, ParamForm::Tag tag);

enum class Exclusion { NotTriplyRegular, NoConclusion };
std::string to_string(Exclusion e);

/// Positive oracle q11^1 and q22^2 without LS or nLS parameters rule out triple regularity.
/// Errors: InconsistentParams, ImprimitiveParams.
Exclusion exclusion_lemma(const SrgParams& p);

/// The LS/nLS lemma for rank 3 graphs: with LS or nLS parameters, neither grid nor the
/// r^2(r+3)^2 family, and strongly regular subconstituents, the parameters of the graph or
/// its complement are (4t^2, t(2t+-1), t(t+-1), t(t+-1)).
struct LsNlsCheck {
  bool applies = false;   // LS or nLS parameters, not grid, not the r-family
  bool excludes = false;  // applies and neither p nor its complement has the 4t^2 form
  /// Without the rank 3 hypothesis the conclusion rests on an open conjecture.
  bool conjecture_conditional = true;
};

LsNlsCheck ls_nls_lemma(const SrgParams& p, bool rank3_known);

struct TripleRegularity {
  bool regular = true;
  // First failure, if any.
  int omega = -1;
  int subconstituent = 0;  // 1 or 2
  PairCounts counts;
  std::string reason;
};

/// Both subconstituents at every required base vertex are strongly regular in the wide
/// sense. With `gens` empty every vertex is checked; otherwise one vertex per orbit.
/// Errors: NotSrg.
TripleRegularity triple_regularity(const Graph& g, std::span<const Permutation> gens = {});

/// Class of an ordered vertex triple: relations of (a,b), (a,c), (b,c).
using TripleClass = std::array<int, 3>;
/// Counts of w by (relation to a, to b, to c), indexed 9i+3j+k.
using TripleCounts = std::array<std::int64_t, 27>;

struct TripleWitness {
  bool constant = true;
  std::map<TripleClass, TripleCounts> table;  // first counts seen per class
  std::optional<std::array<int, 3>> first_violation;
  std::optional<std::array<int, 3>> conflicting_with;
};

/// Brute-force triple intersection numbers over all ordered triples of distinct vertices.
/// Errors: SizeGuardExceeded (n > 300).
TripleWitness triple_intersection_numbers(const Graph& g);

struct VerdictOptions {
  std::string name;
  int omega = 0;
  AlgebraOptions algebra;
  AutOptions aut;
  /// Verified generators from a file; the search is skipped when present.
  std::optional<std::vector<Permutation>> imported;
  /// One report per vertex instead of one per vertex orbit.
  bool all_vertices = false;
};

/// One report per required base vertex: omega alone when Aut is transitive, otherwise one
/// per Aut-orbit (every vertex with all_vertices). Intransitive inputs are reported as case
/// (b) candidates without a verdict. Errors: propagated.
std::vector<AlgebraReport> analyze(const Graph& g, const VerdictOptions& opts = {});

/// Triply transitive iff Aut is transitive of rank 3 and dim T0 = dim T = dim T~.
/// When the group is only known to be a subgroup of Aut (timeout or imported
/// generators) a negative answer is left open.
AlgebraReport triple_transitivity_verdict(const Graph& g, const VerdictOptions& opts = {});

}  // namespace srgta
