#include "srgta/terwilliger.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "srgta/classifier.hpp"
#include "srgta/error.hpp"
#include "srgta/linalg.hpp"

namespace srgta {

std::int64_t block_sum(const Block3& b) {
  std::int64_t s = 0;
  for (const auto& row : b)
    for (auto x : row) s += x;
  return s;
}

std::string block_str(const Block3& b) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << b[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

std::int64_t Idempotents::trace(int i) const {
  std::int64_t s = 0;
  for (auto x : diag[i]) s += x;
  return s;
}

std::vector<std::int64_t> Idempotents::matrix(int i) const {
  const std::size_t n = diag[i].size();
  std::vector<std::int64_t> m(n * n, 0);
  for (std::size_t v = 0; v < n; ++v) m[v * n + v] = diag[i][v];
  return m;
}

Idempotents idempotents(const Graph& g, int omega) {
  require_srg(g);
  Idempotents e;
  e.part = partition_at(g, omega);
  for (int i = 0; i < 3; ++i) {
    e.diag[i].assign(static_cast<std::size_t>(g.order()), 0);
    for (int v : e.part[i]) e.diag[i][v] = 1;
  }
  return e;
}

namespace {

// A_0 = I, A_1 = adjacency, A_2 = adjacency of the complement.
std::array<std::vector<std::int64_t>, 3> relation_matrices(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::array<std::vector<std::int64_t>, 3> a;
  for (auto& m : a) m.assign(n * n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      int r = u == v ? 0 : (g.adjacent(static_cast<int>(u), static_cast<int>(v)) ? 1 : 2);
      a[r][u * n + v] = 1;
    }
  return a;
}

template <class Field>
std::array<std::vector<typename Field::value_type>, 3> field_idempotents(const Field& f, const Idempotents& e) {
  std::array<std::vector<typename Field::value_type>, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = to_field(f, std::span<const std::int64_t>(e.matrix(i)));
  return out;
}

template <class Field>
DimBlocks t0_over(const Field& f, const Graph& g, const Idempotents& e) {
  const auto n = static_cast<std::size_t>(g.order());
  auto a = relation_matrices(g);
  EchelonBasis<Field> basis(f, n * n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // E*_i A_j E*_k keeps the (row in cell i, column in cell k) entries of A_j.
        std::vector<typename Field::value_type> m(n * n, f.zero());
        for (int r : e.part[i])
          for (int c : e.part[k]) m[r * n + c] = f.from_int(a[j][r * n + c]);
        basis.insert(std::move(m));
      }
  return {static_cast<std::int64_t>(basis.size()), block_dims(basis, field_idempotents(f, e), n)};
}

template <class Field>
DimBlocks t_over(const Field& f, const Graph& g, const Idempotents& e) {
  const auto n = static_cast<std::size_t>(g.order());
  auto a = relation_matrices(g);
  std::vector<std::vector<typename Field::value_type>> gens;
  gens.push_back(to_field(f, std::span<const std::int64_t>(a[1])));
  gens.push_back(to_field(f, std::span<const std::int64_t>(a[2])));
  auto es = field_idempotents(f, e);
  for (auto& m : es) gens.push_back(m);
  auto basis = algebra_closure(f, gens, n);
  return {static_cast<std::int64_t>(basis.size()), block_dims(basis, es, n)};
}

// Runs `fn` over the configured substrate(s), demanding agreement between two primes.
template <class Fn>
DimBlocks over_substrate(const AlgebraOptions& opts, const std::string& what, Fn fn) {
  if (opts.rational) return fn(RationalField{});
  DimBlocks first = fn(PrimeField(opts.prime));
  if (!opts.two_primes) return first;
  std::uint64_t p2 = opts.second_prime != 0 ? opts.second_prime : prime_from_seed(opts.seed);
  if (p2 == opts.prime) p2 = prime_from_seed(opts.seed + 1);
  DimBlocks second = fn(PrimeField(p2));
  if (first.dim != second.dim || first.blocks != second.blocks)
    throw Error(ErrorKind::PrimeDisagreement, what + ": " + std::to_string(first.dim) + " mod " + std::to_string(opts.prime) +
                                                  " vs " + std::to_string(second.dim) + " mod " + std::to_string(p2));
  return first;
}

}  // namespace

DimBlocks t0_report(const Graph& g, int omega, const AlgebraOptions& opts) {
  const SrgParams params = require_srg(g);
  const Idempotents e = idempotents(g, omega);
  DimBlocks r = over_substrate(opts, "dim T0", [&](const auto& f) { return t0_over(f, g, e); });
  const std::int64_t expected = intersection_numbers(params).nonzero_count();
  if (r.dim != expected)
    throw Error(ErrorKind::OracleMismatch, "span of T0 has dimension " + std::to_string(r.dim) + " but " +
                                               std::to_string(expected) + " intersection numbers are nonzero");
  return r;
}

DimBlocks t_report(const Graph& g, int omega, const AlgebraOptions& opts) {
  require_srg(g);
  if (g.order() > size_guard(opts.closure_guard))
    throw Error(ErrorKind::SizeGuardExceeded, "algebra closure limited to " + std::to_string(size_guard(opts.closure_guard)) + " vertices");
  const Idempotents e = idempotents(g, omega);
  return over_substrate(opts, "dim T", [&](const auto& f) { return t_over(f, g, e); });
}

TTildeReport t_tilde_report(const Graph& g, std::span<const Permutation> gens, int omega) {
  require_srg(g);
  const int n = g.order();
  const VertexPartition part = partition_at(g, omega);
  const GroupBSGS G = schreier_sims(gens, n);

  TTildeReport r;
  r.order = G.order();
  auto tr = transitivity_rank(G);
  r.transitive = tr.transitive;

  const std::vector<Permutation> stab = point_stabilizer(G, omega);
  const int stab_orbits = orbit_count(stab, n);
  r.rank = r.transitive ? stab_orbits : 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.dims.blocks[i][j] = orbital_count_block(stab, part[i], part[j], n);
  r.dims.dim = block_sum(r.dims.blocks);

  // Orbitals of G_w correspond to pairs (x, orbit of (G_w)_x) with x running over G_w-orbit representatives.
  const auto reps = orbit_representatives(stab, n);
  for (int x = 0; x < n; ++x) {
    if (reps[x] != x) continue;
    if (x == omega) r.orbit_formula_total += stab_orbits;
    else r.orbit_formula_total += orbit_count(two_point_stabilizer(G, omega, x), n);
  }
  if (r.orbit_formula_total != r.dims.dim)
    throw Error(ErrorKind::InternalDisagreement, "orbital blocks sum to " + std::to_string(r.dims.dim) +
                                                     " but the stabilizer orbit formula gives " + std::to_string(r.orbit_formula_total));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kCluster = 1e-8;
constexpr double kGap = 1e-6;

struct SpectrumCount {
  bool conclusive = true;
  int in_restricted = 0;   // distinct eigenvalues equal to theta or tau
  int outside = 0;         // the others
};

SpectrumCount count_spectrum(const Graph& h, double theta, double tau) {
  SpectrumCount out;
  const int m = h.order();
  if (m == 0) return out;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (int u = 0; u < m; ++u)
    for (int v : h.neighbours(u)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m);
  std::sort(ev.begin(), ev.end());

  // Drop one copy of the valency: the all-ones eigenvector.
  const double valency = h.degree(0);
  auto it = std::min_element(ev.begin(), ev.end(), [&](double x, double y) { return std::abs(x - valency) < std::abs(y - valency); });
  ev.erase(it);

  std::vector<double> distinct;
  for (double x : ev) {
    if (!distinct.empty()) {
      double d = x - distinct.back();
      if (d <= kCluster) continue;
      if (d < kGap) out.conclusive = false;
    }
    distinct.push_back(x);
  }
  for (double x : distinct) {
    double d = std::min(std::abs(x - theta), std::abs(x - tau));
    if (d > kCluster && d < kGap) out.conclusive = false;
    if (d <= kCluster) ++out.in_restricted;
    else ++out.outside;
  }
  return out;
}

}  // namespace

SpectralCheck t_dim_spectral_crosscheck(const Graph& g, int omega) {
  const SrgParams params = require_srg(g);
  auto [theta_q, tau_q] = srg_eigenvalues(params);
  const auto theta = static_cast<double>(theta_q.to_long_double());
  const auto tau = static_cast<double>(tau_q.to_long_double());
  const Subconstituents s = subconstituents(g, omega);
  SpectrumCount c1 = count_spectrum(s.first, theta, tau);
  SpectrumCount c2 = count_spectrum(s.second, theta, tau);
  SpectralCheck r;
  r.conclusive = c1.conclusive && c2.conclusive;
  r.m1 = c1.in_restricted;
  r.m2 = c2.in_restricted;
  r.n1 = c1.outside;
  r.n2 = c2.outside;
  r.dim = r.m1 + r.m2 + 4 * r.n1 + 9;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json block_json(const Block3& b) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : b) j.push_back(nlohmann::json(row));
  return j;
}

Block3 block_from(const nlohmann::json& j) {
  Block3 b{};
  for (int i = 0; i < 3; ++i)
    for (int j2 = 0; j2 < 3; ++j2) b[i][j2] = j.at(i).at(j2).get<std::int64_t>();
  return b;
}

}  // namespace

nlohmann::json to_json(const AlgebraReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["params"] = {{"n", r.params.n}, {"k", r.params.k}, {"lambda", r.params.lambda}, {"mu", r.params.mu}};
  j["omega"] = r.omega;
  j["dims"] = {{"t0", r.t0}, {"t", r.t}, {"t_tilde", r.t_tilde}};
  j["blocks"] = {{"t0", block_json(r.t0_blocks)}, {"t", block_json(r.t_blocks)}, {"t_tilde", block_json(r.t_tilde_blocks)}};
  j["t_tilde_form"] = {{"r1", r.r1}, {"r2", r.r2}, {"t", r.t_offdiag}};
  j["verdicts"] = {{"transitive", r.transitive},
                   {"rank", r.rank},
                   {"rank3", r.rank3},
                   {"triply_regular", r.triply_regular},
                   {"triply_transitive", r.triply_transitive ? nlohmann::json(*r.triply_transitive) : nlohmann::json(nullptr)}};
  j["aut_order"] = r.aut_order.str();
  j["flags"] = {{"aut_lower_bound_only", r.flags.aut_lower_bound_only},
                {"aut_imported", r.flags.aut_imported},
                {"case_b_candidate", r.flags.case_b_candidate}};
  return j;
}

AlgebraReport report_from_json(const nlohmann::json& j) {
  AlgebraReport r;
  r.name = j.at("name").get<std::string>();
  const auto& p = j.at("params");
  r.params = {p.at("n").get<std::int64_t>(), p.at("k").get<std::int64_t>(), p.at("lambda").get<std::int64_t>(),
              p.at("mu").get<std::int64_t>()};
  r.omega = j.at("omega").get<int>();
  r.t0 = j.at("dims").at("t0").get<std::int64_t>();
  r.t = j.at("dims").at("t").get<std::int64_t>();
  r.t_tilde = j.at("dims").at("t_tilde").get<std::int64_t>();
  r.t0_blocks = block_from(j.at("blocks").at("t0"));
  r.t_blocks = block_from(j.at("blocks").at("t"));
  r.t_tilde_blocks = block_from(j.at("blocks").at("t_tilde"));
  r.r1 = j.at("t_tilde_form").at("r1").get<std::int64_t>();
  r.r2 = j.at("t_tilde_form").at("r2").get<std::int64_t>();
  r.t_offdiag = j.at("t_tilde_form").at("t").get<std::int64_t>();
  const auto& v = j.at("verdicts");
  r.transitive = v.at("transitive").get<bool>();
  r.rank = v.at("rank").get<int>();
  r.rank3 = v.at("rank3").get<bool>();
  r.triply_regular = v.at("triply_regular").get<bool>();
  if (!v.at("triply_transitive").is_null()) r.triply_transitive = v.at("triply_transitive").get<bool>();
  r.aut_order = BigInt(j.at("aut_order").get<std::string>());
  const auto& f = j.at("flags");
  r.flags.aut_lower_bound_only = f.at("aut_lower_bound_only").get<bool>();
  r.flags.aut_imported = f.at("aut_imported").get<bool>();
  r.flags.case_b_candidate = f.at("case_b_candidate").get<bool>();
  return r;
}

std::string table_header() {
  return "SRG                 | Name                     | |Aut|            | T0 | T  | T~ | Decomposition";
}

std::string table_row(const AlgebraReport& r) {
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  std::string aut = r.aut_order.str();
  if (r.flags.aut_lower_bound_only) aut = ">=" + aut;
  std::ostringstream os;
  os << pad(r.params.str(), 19) << " | " << pad(r.name, 24) << " | " << pad(aut, 16) << " | " << pad(std::to_string(r.t0), 2)
     << " | " << pad(std::to_string(r.t), 2) << " | " << pad(std::to_string(r.t_tilde), 2) << " | " << block_str(r.t_tilde_blocks);
  return os.str();
}

}  // namespace srgta
