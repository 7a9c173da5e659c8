#include "srgta/classifier.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <boost/multiprecision/integer.hpp>

#include "srgta/error.hpp"

namespace srgta {

// ---------------------------------------------------------------------------
// Intersection numbers and the shapes of T0.

int IntersectionNumbers::nonzero_count() const {
  int c = 0;
  for (const auto& a : p)
    for (const auto& b : a)
      for (auto x : b) c += x != 0;
  return c;
}

Block3 IntersectionNumbers::t0_blocks() const {
  Block3 b{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) b[i][k] += p[i][j][k] != 0;
  return b;
}

IntersectionNumbers intersection_numbers(const SrgParams& s) {
  s.validate();
  const auto n = s.n, k = s.k, l = s.lambda, m = s.mu;
  IntersectionNumbers r;
  auto& p = r.p;
  p[0][0][0] = 1;
  p[1][1][0] = k;
  p[2][2][0] = n - k - 1;

  p[0][1][1] = p[1][0][1] = 1;
  p[1][1][1] = l;
  p[1][2][1] = p[2][1][1] = k - l - 1;
  p[2][2][1] = n - 2 * k + l;

  p[0][2][2] = p[2][0][2] = 1;
  p[1][1][2] = m;
  p[1][2][2] = p[2][1][2] = k - m;
  p[2][2][2] = n - 2 * k + m - 2;
  return r;
}

T0Case t0_case(const SrgParams& p) {
  if (!is_primitive(p)) return T0Case::Imprimitive;
  const bool free1 = p.lambda == 0;
  const bool free2 = p.complement().lambda == 0;
  if (free1 && free2) return T0Case::BothTriangleFree;
  if (free1) return T0Case::GraphTriangleFree;
  if (free2) return T0Case::ComplementTriangleFree;
  return T0Case::BothTriangles;
}

std::string to_string(T0Case c) {
  switch (c) {
    case T0Case::Imprimitive: return "imprimitive";
    case T0Case::BothTriangleFree: return "graph and complement triangle-free";
    case T0Case::GraphTriangleFree: return "graph triangle-free";
    case T0Case::ComplementTriangleFree: return "complement triangle-free";
    case T0Case::BothTriangles: return "graph and complement have triangles";
  }
  return "?";
}

bool t0_template_matches(const SrgParams& p, const Block3& blocks) {
  std::vector<Block3> templates;
  switch (t0_case(p)) {
    case T0Case::Imprimitive: {
      const Block3 a{{{1, 1, 1}, {1, 2, 1}, {1, 1, 3}}};
      const Block3 b{{{1, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
      for (const Block3& t : {a, b}) {
        templates.push_back(t);
        Block3 s = t;
        std::swap(s[1][1], s[2][2]);
        templates.push_back(s);
      }
      break;
    }
    case T0Case::BothTriangleFree: templates.push_back({{{1, 1, 1}, {1, 2, 2}, {1, 2, 2}}}); break;
    case T0Case::GraphTriangleFree: templates.push_back({{{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}}); break;
    case T0Case::ComplementTriangleFree: templates.push_back({{{1, 1, 1}, {1, 3, 2}, {1, 2, 2}}}); break;
    case T0Case::BothTriangles: templates.push_back({{{1, 1, 1}, {1, 3, 2}, {1, 2, 3}}}); break;
  }
  const std::array<std::int64_t, 3> size{1, p.k, p.n - p.k - 1};
  for (Block3 t : templates) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t[i][j] = std::min(t[i][j], size[i] * size[j]);
    if (t == blocks) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Krein parameters.

KreinReport krein(const SrgParams& s) {
  s.validate();
  if (!is_primitive(s)) throw Error(ErrorKind::ImprimitiveParams, s.str());
  KreinReport r;
  auto [theta, tau] = srg_eigenvalues(s);
  r.theta = theta;
  r.tau = tau;
  const QuadExt n(s.n), k(s.k);
  r.f = (-k - (n - 1) * tau) / (theta - tau);
  r.g = n - 1 - r.f;

  r.q11_paper = theta * tau * tau - 2 * theta * theta * tau - theta * theta - k * theta + k * tau * tau + 2 * k * tau;
  r.q22_paper = theta * theta * tau - 2 * theta * tau * tau - theta * theta - k * tau + k * theta * theta + 2 * k * theta;

  // P[l][i]: eigenvalue of A_l on the i-th eigenspace (all-ones, theta, tau).
  const std::array<std::array<QuadExt, 3>, 3> P{{{1, 1, 1},
                                                 {k, theta, tau},
                                                 {n - k - 1, -1 - theta, -1 - tau}}};
  const std::array<QuadExt, 3> valency{1, k, n - k - 1};
  const std::array<QuadExt, 3> mult{1, r.f, r.g};
  auto q = [&](int i) {
    QuadExt sum = 0;
    for (int l = 0; l < 3; ++l) sum += P[l][i] * P[l][i] * P[l][i] / (valency[l] * valency[l]);
    return mult[i] * mult[i] / n * sum;
  };
  r.q11_oracle = q(1);
  r.q22_oracle = q(2);
  r.sign11 = r.q11_oracle.sign();
  r.sign22 = r.q22_oracle.sign();
  r.agree = r.q11_paper.sign() == r.sign11 && r.q22_paper.sign() == r.sign22;
  return r;
}

// ---------------------------------------------------------------------------
// Parameter forms.

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto r = static_cast<std::int64_t>(boost::multiprecision::sqrt(BigInt(v)));
  if (r * r != v) return std::nullopt;
  return r;
}

bool equals_int(const QuadExt& x, std::int64_t v) { return x == QuadExt(static_cast<long long>(v)); }

}  // namespace

std::string ParamForm::str() const {
  std::ostringstream os;
  switch (tag) {
    case Tag::LatinSquare: os << "LS(m=" << a << ",n=" << b << ")"; break;
    case Tag::NegativeLatinSquare: os << "nLS(m=" << a << ",n=" << b << ")"; break;
    case Tag::FourTSquare: os << "4t^2(t=" << a << "," << (b > 0 ? "+" : "-") << ")"; break;
    case Tag::RSpecial: os << "r^2(r+3)^2(r=" << a << ")"; break;
    case Tag::Grid: os << "Grid(" << a << ")"; break;
    case Tag::Smith: os << "Smith(theta=" << theta.str() << ",tau=" << tau.str() << ")"; break;
  }
  return os.str();
}

std::vector<ParamForm> param_form(const SrgParams& s) {
  s.validate();
  std::vector<ParamForm> out;
  using T = ParamForm::Tag;
  const auto v = s.n, k = s.k, l = s.lambda, mu = s.mu;

  if (auto n = exact_sqrt(v); n && *n >= 2) {
    if (k % (*n - 1) == 0) {
      const auto m = k / (*n - 1);
      if (m >= 2 && m <= *n && l == (m - 1) * (m - 2) + *n - 2 && mu == m * (m - 1))
        out.push_back({T::LatinSquare, m, *n, {}, {}});
    }
    if (k % (*n + 1) == 0) {
      const auto m = k / (*n + 1);
      if (m >= 2 && m <= *n && l == m * (m + 3) - *n && mu == m * (m + 1))
        out.push_back({T::NegativeLatinSquare, m, *n, {}, {}});
    }
    if (k == 2 * (*n - 1) && l == *n - 2 && mu == 2) out.push_back({T::Grid, *n, 0, {}, {}});
  }
  if (v % 4 == 0) {
    if (auto t = exact_sqrt(v / 4); t && *t >= 2) {
      const auto tt = *t;
      for (int sgn : {+1, -1})
        if (k == tt * (2 * tt + sgn) && l == tt * (tt + sgn) && mu == tt * (tt + sgn))
          out.push_back({T::FourTSquare, tt, sgn, {}, {}});
    }
  }
  if (l == 0) {
    for (std::int64_t r = 1; r * r * (r + 3) * (r + 3) <= v; ++r)
      if (r * r * (r + 3) * (r + 3) == v && k == r * r * r + 3 * r * r + r && mu == r * r + r)
        out.push_back({T::RSpecial, r, 0, {}, {}});
  }

  auto [theta, tau] = srg_eigenvalues(s);
  const QuadExt d = theta - tau;
  const QuadExt tt1 = theta * (theta + 1);
  if (d >= theta * (theta + 3)) {
    const QuadExt den_n = d * d - tt1 * tt1;
    const QuadExt den = d + tt1;
    if (den_n.sign() != 0 && den.sign() != 0) {
      const QuadExt sn = 2 * d * d * ((2 * theta + 1) * d - 3 * tt1) / den_n;
      const QuadExt sk = -tau * ((2 * theta + 1) * d - tt1) / den;
      const QuadExt sl = -theta * (tau + 1) * (d - theta * (theta + 3)) / den;
      const QuadExt sm = -(theta + 1) * tau * (d - tt1) / den;
      if (equals_int(sn, v) && equals_int(sk, k) && equals_int(sl, l) && equals_int(sm, mu))
        out.push_back({T::Smith, 0, 0, theta, tau});
    }
  }
  return out;
}

bool has_form(const std::vector<ParamForm>& forms, ParamForm::Tag tag) {
  return std::any_of(forms.begin(), forms.end(), [&](const ParamForm& f) { return f.tag == tag; });
}

std::string to_string(Exclusion e) { return e == Exclusion::NotTriplyRegular ? "NotTriplyRegular" : "NoConclusion"; }

Exclusion exclusion_lemma(const SrgParams& p) {
  const KreinReport kr = krein(p);
  const auto forms = param_form(p);
  const bool ls = has_form(forms, ParamForm::Tag::LatinSquare) || has_form(forms, ParamForm::Tag::NegativeLatinSquare);
  return kr.sign11 > 0 && kr.sign22 > 0 && !ls ? Exclusion::NotTriplyRegular : Exclusion::NoConclusion;
}

LsNlsCheck ls_nls_lemma(const SrgParams& p, bool rank3_known) {
  using T = ParamForm::Tag;
  LsNlsCheck r;
  r.conjecture_conditional = !rank3_known;
  const auto forms = param_form(p);
  const auto cforms = param_form(p.complement());
  const bool ls = has_form(forms, T::LatinSquare) || has_form(forms, T::NegativeLatinSquare);
  const bool special = has_form(forms, T::Grid) || has_form(forms, T::RSpecial);
  r.applies = ls && !special;
  r.excludes = r.applies && !has_form(forms, T::FourTSquare) && !has_form(cforms, T::FourTSquare);
  return r;
}

// ---------------------------------------------------------------------------
// Triple regularity.

namespace {

std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

}  // namespace

TripleRegularity triple_regularity(const Graph& g, std::span<const Permutation> gens) {
  require_srg(g);
  const int n = g.order();
  std::vector<int> omegas;
  if (gens.empty()) {
    for (int v = 0; v < n; ++v) omegas.push_back(v);
  } else {
    const auto reps = orbit_representatives(gens, n);
    for (int v = 0; v < n; ++v)
      if (reps[v] == v) omegas.push_back(v);
  }
  TripleRegularity r;
  for (int w : omegas) {
    const Subconstituents s = subconstituents(g, w);
    for (int which : {1, 2}) {
      PairCounts pc = pair_counts(which == 1 ? s.first : s.second);
      std::string why;
      if (pc.degrees.size() > 1) why = "degrees " + set_str(pc.degrees);
      else if (pc.adjacent.size() > 1) why = "adjacent pairs have " + set_str(pc.adjacent) + " common neighbours";
      else if (pc.nonadjacent.size() > 1) why = "non-adjacent pairs have " + set_str(pc.nonadjacent) + " common neighbours";
      if (why.empty()) continue;
      r.regular = false;
      r.omega = w;
      r.subconstituent = which;
      r.counts = std::move(pc);
      r.reason = std::move(why);
      return r;
    }
  }
  return r;
}

TripleWitness triple_intersection_numbers(const Graph& g) {
  const int n = g.order();
  if (n > 300) throw Error(ErrorKind::SizeGuardExceeded, "triple intersection numbers limited to 300 vertices");
  const int w = g.words();
  using Word = Graph::Word;

  // rel[r][v]: bitset of vertices in relation r to v.
  std::array<std::vector<Word>, 3> rel;
  for (auto& x : rel) x.assign(static_cast<std::size_t>(n) * w, 0);
  for (int v = 0; v < n; ++v) {
    Word* r0 = &rel[0][static_cast<std::size_t>(v) * w];
    Word* r1 = &rel[1][static_cast<std::size_t>(v) * w];
    Word* r2 = &rel[2][static_cast<std::size_t>(v) * w];
    const Word* a = g.row(v);
    for (int i = 0; i < w; ++i) r1[i] = a[i];
    r0[v >> 6] |= Word{1} << (v & 63);
    for (int u = 0; u < n; ++u)
      if (u != v && !g.adjacent(u, v)) r2[u >> 6] |= Word{1} << (u & 63);
  }
  auto row = [&](int r, int v) { return &rel[r][static_cast<std::size_t>(v) * w]; };
  auto relation = [&](int a, int b) { return a == b ? 0 : (g.adjacent(a, b) ? 1 : 2); };

  TripleWitness out;
  std::array<std::optional<std::pair<TripleCounts, std::array<int, 3>>>, 27> seen;
  static constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<Word> ab(w);

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        TripleCounts cnt{};
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            const Word* x = row(i, a);
            const Word* y = row(j, b);
            for (int t = 0; t < w; ++t) ab[t] = x[t] & y[t];
            for (int k = 0; k < 3; ++k) {
              const Word* z = row(k, c);
              std::int64_t s = 0;
              for (int t = 0; t < w; ++t) s += std::popcount(ab[t] & z[t]);
              cnt[9 * i + 3 * j + k] = s;
            }
          }
        const std::array<int, 3> tri{a, b, c};
        for (const auto& perm : kPerms) {
          const std::array<int, 3> o{tri[perm[0]], tri[perm[1]], tri[perm[2]]};
          const TripleClass cls{relation(o[0], o[1]), relation(o[0], o[2]), relation(o[1], o[2])};
          TripleCounts pc{};
          for (int i0 = 0; i0 < 3; ++i0)
            for (int i1 = 0; i1 < 3; ++i1)
              for (int i2 = 0; i2 < 3; ++i2) {
                std::array<int, 3> orig{};
                orig[perm[0]] = i0;
                orig[perm[1]] = i1;
                orig[perm[2]] = i2;
                pc[9 * i0 + 3 * i1 + i2] = cnt[9 * orig[0] + 3 * orig[1] + orig[2]];
              }
          auto& slot = seen[9 * cls[0] + 3 * cls[1] + cls[2]];
          if (!slot) {
            slot.emplace(pc, o);
            out.table[cls] = pc;
          } else if (slot->first != pc) {
            out.constant = false;
            out.first_violation = o;
            out.conflicting_with = slot->second;
            return out;
          }
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// The pipeline.

std::vector<AlgebraReport> analyze(const Graph& g, const VerdictOptions& opts) {
  const SrgParams params = require_srg(g);
  const int n = g.order();
  if (opts.omega < 0 || opts.omega >= n) throw Error(ErrorKind::VertexOutOfRange, std::to_string(opts.omega));

  ReportFlags flags;
  std::vector<Permutation> gens;
  if (opts.imported) {
    for (std::size_t i = 0; i < opts.imported->size(); ++i) {
      const Permutation& p = (*opts.imported)[i];
      if (p.degree() != n) throw Error(ErrorKind::DegreeMismatch, "generator " + std::to_string(i) + " has degree " + std::to_string(p.degree()));
      if (!is_automorphism(g, p)) throw Error(ErrorKind::NotAnAutomorphism, "generator " + std::to_string(i));
    }
    gens = *opts.imported;
    flags.aut_imported = true;
  } else {
    AutResult ar = automorphism_group(g, opts.aut);
    gens = std::move(ar.gens);
    flags.aut_lower_bound_only = !ar.complete;
  }
  const GroupBSGS group = schreier_sims(gens, n);
  const TransitivityRank tr = transitivity_rank(group);
  flags.case_b_candidate = !tr.transitive;

  std::vector<int> omegas;
  if (opts.all_vertices) {
    for (int v = 0; v < n; ++v) omegas.push_back(v);
  } else if (tr.transitive) {
    omegas.push_back(opts.omega);
  } else {
    const auto reps = orbit_representatives(gens, n);
    for (int v = 0; v < n; ++v)
      if (reps[v] == v) omegas.push_back(v);
  }

  std::vector<AlgebraReport> out;
  for (int w : omegas) {
    AlgebraReport r;
    r.name = opts.name;
    r.params = params;
    r.omega = w;
    const DimBlocks t0 = t0_report(g, w, opts.algebra);
    const DimBlocks t = t_report(g, w, opts.algebra);
    const TTildeReport tt = t_tilde_report(g, gens, w);
    r.t0 = t0.dim;
    r.t = t.dim;
    r.t_tilde = tt.dims.dim;
    r.t0_blocks = t0.blocks;
    r.t_blocks = t.blocks;
    r.t_tilde_blocks = tt.dims.blocks;
    r.r1 = tt.dims.blocks[1][1];
    r.r2 = tt.dims.blocks[2][2];
    r.t_offdiag = tt.dims.blocks[1][2];
    r.transitive = tr.transitive;
    r.rank = tr.rank;
    r.rank3 = tr.transitive && tr.rank == 3;
    r.triply_regular = r.t0 == r.t;
    r.aut_order = group.order();
    r.flags = flags;
    if (tr.transitive) {
      const bool yes = r.rank3 && r.t0 == r.t && r.t == r.t_tilde;
      // A subgroup of Aut can only overestimate T~ and underestimate transitivity.
      if (yes || !(flags.aut_imported || flags.aut_lower_bound_only)) r.triply_transitive = yes;
    }
    out.push_back(std::move(r));
  }
  return out;
}

AlgebraReport triple_transitivity_verdict(const Graph& g, const VerdictOptions& opts) {
  VerdictOptions one = opts;
  one.all_vertices = false;
  return analyze(g, one).front();
}

}  // namespace srgta
