#include "srgta/permgroup.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <boost/pending/disjoint_sets.hpp>

#include "srgta/error.hpp"

namespace srgta {

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) { std::iota(img_.begin(), img_.end(), 0); }

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> hit(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || hit[x])
      throw Error(ErrorKind::ParseError, "image list is not a permutation");
    hit[x] = 1;
  }
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
  return r;
}

std::string Permutation::cycles_str() const {
  std::string s;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    s += "(";
    for (auto j = static_cast<int>(i); !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (s.back() != '(') s += " ";
      s += std::to_string(j);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  Permutation r;
  r.img_.resize(g.img_.size());
  for (std::size_t i = 0; i < g.img_.size(); ++i) r.img_[i] = h.img_[g.img_[i]];
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void check_degrees(std::span<const Permutation> gens, int n) {
  for (const auto& g : gens)
    if (g.degree() != n)
      throw Error(ErrorKind::DegreeMismatch, "generator of degree " + std::to_string(g.degree()) + ", expected " + std::to_string(n));
}

}  // namespace

std::vector<int> orbit(std::span<const Permutation> gens, int point, int n) {
  check_degrees(gens, n);
  if (point < 0 || point >= n) throw Error(ErrorKind::VertexOutOfRange, std::to_string(point));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> out{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      int y = g(out[i]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> orbit_representatives(std::span<const Permutation> gens, int n) {
  check_degrees(gens, n);
  std::vector<int> rep(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    if (rep[p] >= 0) continue;
    rep[p] = p;
    std::vector<int> queue{p};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : gens) {
        int y = g(queue[i]);
        if (rep[y] < 0) {
          rep[y] = p;
          queue.push_back(y);
        }
      }
    }
  }
  return rep;
}

int orbit_count(std::span<const Permutation> gens, int n) {
  auto rep = orbit_representatives(gens, n);
  int c = 0;
  for (int p = 0; p < n; ++p) c += rep[p] == p;
  return c;
}

// ---------------------------------------------------------------------------
// Schreier-Sims

void GroupBSGS::rebuild_orbit(Level& lv) const {
  lv.back.assign(static_cast<std::size_t>(n_), -2);
  lv.orbit = {lv.point};
  lv.back[lv.point] = -1;
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    for (int gi : lv.gens) {
      int y = pool_[gi](lv.orbit[i]);
      if (lv.back[y] == -2) {
        lv.back[y] = gi;
        lv.orbit.push_back(y);
      }
    }
  }
}

void GroupBSGS::strip_step(const Level& lv, int beta, std::vector<int>& g) const {
  int pt = beta;
  while (pt != lv.point) {
    const auto& inv = pool_inv_[lv.back[pt]].images();
    for (auto& x : g) x = inv[x];
    pt = inv[pt];
  }
}

std::size_t GroupBSGS::strip(std::vector<int>& g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    int beta = g[levels_[l].point];
    if (levels_[l].back[beta] == -2) return l;
    strip_step(levels_[l], beta, g);
  }
  return levels_.size();
}

std::vector<Permutation> GroupBSGS::stabilizer_generators(std::size_t depth) const {
  std::vector<Permutation> out;
  if (depth >= levels_.size()) return out;
  for (int gi : levels_[depth].gens) out.push_back(pool_[gi]);
  return out;
}

bool GroupBSGS::contains(const Permutation& g) const {
  if (g.degree() != n_) return false;
  std::vector<int> h = g.images();
  if (strip(h, 0) != levels_.size()) return false;
  for (int i = 0; i < n_; ++i)
    if (h[i] != i) return false;
  return true;
}

namespace {

int least_moved(const std::vector<int>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != static_cast<int>(i)) return static_cast<int>(i);
  return -1;
}

bool fixes_all(const std::vector<int>& g, const std::vector<int>& pts) {
  return std::all_of(pts.begin(), pts.end(), [&](int p) { return g[p] == p; });
}

}  // namespace

GroupBSGS schreier_sims(std::span<const Permutation> gens, int n, std::span<const int> base_prefix) {
  check_degrees(gens, n);
  GroupBSGS G;
  G.n_ = n;
  for (int b : base_prefix) {
    if (b < 0 || b >= n) throw Error(ErrorKind::VertexOutOfRange, std::to_string(b));
    if (std::find(G.base_.begin(), G.base_.end(), b) == G.base_.end()) G.base_.push_back(b);
  }
  for (const auto& g : gens) {
    if (g.is_identity() || std::find(G.pool_.begin(), G.pool_.end(), g) != G.pool_.end()) continue;
    G.pool_.push_back(g);
    G.pool_inv_.push_back(g.inverse());
    if (fixes_all(g.images(), G.base_)) G.base_.push_back(least_moved(g.images()));
  }

  auto add_level = [&](int point) {
    GroupBSGS::Level lv;
    lv.point = point;
    G.levels_.push_back(std::move(lv));
  };
  for (int b : G.base_) add_level(b);
  for (std::size_t l = 0; l < G.levels_.size(); ++l) {
    std::vector<int> prefix(G.base_.begin(), G.base_.begin() + static_cast<std::ptrdiff_t>(l));
    for (std::size_t gi = 0; gi < G.pool_.size(); ++gi)
      if (fixes_all(G.pool_[gi].images(), prefix)) G.levels_[l].gens.push_back(static_cast<int>(gi));
    G.rebuild_orbit(G.levels_[l]);
  }

  std::vector<int> h(static_cast<std::size_t>(n));
  auto i = static_cast<std::ptrdiff_t>(G.levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    auto& lv = G.levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; !restarted && oi < lv.orbit.size(); ++oi) {
      const int beta = lv.orbit[oi];
      // u_beta, recovered by inverting id * u_beta^{-1}.
      std::vector<int> ubeta_inv(static_cast<std::size_t>(n));
      std::iota(ubeta_inv.begin(), ubeta_inv.end(), 0);
      G.strip_step(lv, beta, ubeta_inv);
      std::vector<int> ubeta(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) ubeta[ubeta_inv[x]] = x;

      for (std::size_t xi = 0; xi < lv.gens.size(); ++xi) {
        const auto& x = G.pool_[lv.gens[xi]].images();
        for (int p = 0; p < n; ++p) h[p] = x[ubeta[p]];
        G.strip_step(lv, h[lv.point], h);
        if (least_moved(h) < 0) continue;
        std::size_t j = G.strip(h, static_cast<std::size_t>(i) + 1);
        if (j == G.levels_.size() && least_moved(h) < 0) continue;

        if (j == G.levels_.size()) {
          G.base_.push_back(least_moved(h));
          add_level(G.base_.back());
        }
        Permutation y(h);
        G.pool_inv_.push_back(y.inverse());
        G.pool_.push_back(std::move(y));
        const int yi = static_cast<int>(G.pool_.size()) - 1;
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          G.levels_[l].gens.push_back(yi);
          G.rebuild_orbit(G.levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  G.order_ = 1;
  for (const auto& lv : G.levels_) G.order_ *= lv.orbit.size();
  return G;
}

std::vector<Permutation> point_stabilizer(const GroupBSGS& g, int w) {
  if (w < 0 || w >= g.degree()) throw Error(ErrorKind::VertexOutOfRange, std::to_string(w));
  const int prefix[] = {w};
  return schreier_sims(g.strong_generators(), g.degree(), prefix).stabilizer_generators(1);
}

std::vector<Permutation> two_point_stabilizer(const GroupBSGS& g, int w, int w2) {
  if (w < 0 || w >= g.degree()) throw Error(ErrorKind::VertexOutOfRange, std::to_string(w));
  if (w2 < 0 || w2 >= g.degree() || w2 == w) throw Error(ErrorKind::VertexOutOfRange, std::to_string(w2));
  const int prefix[] = {w, w2};
  return schreier_sims(g.strong_generators(), g.degree(), prefix).stabilizer_generators(2);
}

TransitivityRank transitivity_rank(const GroupBSGS& g) {
  TransitivityRank r;
  if (g.degree() == 0) return r;
  r.transitive = static_cast<int>(orbit(g.strong_generators(), 0, g.degree()).size()) == g.degree();
  if (r.transitive) r.rank = orbit_count(point_stabilizer(g, 0), g.degree());
  return r;
}

std::int64_t orbital_count_block(std::span<const Permutation> stab_gens, std::span<const int> di,
                                 std::span<const int> dj, int n) {
  check_degrees(stab_gens, n);
  std::vector<int> pos_i(static_cast<std::size_t>(n), -1), pos_j(static_cast<std::size_t>(n), -1);
  for (std::size_t a = 0; a < di.size(); ++a) pos_i.at(di[a]) = static_cast<int>(a);
  for (std::size_t b = 0; b < dj.size(); ++b) pos_j.at(dj[b]) = static_cast<int>(b);
  for (const auto& g : stab_gens) {
    for (int x : di)
      if (pos_i[g(x)] < 0) throw Error(ErrorKind::CellNotInvariant, "generator moves a point out of the row cell");
    for (int y : dj)
      if (pos_j[g(y)] < 0) throw Error(ErrorKind::CellNotInvariant, "generator moves a point out of the column cell");
  }
  const std::size_t cols = dj.size();
  const std::size_t total = di.size() * cols;
  if (total == 0) return 0;
  boost::disjoint_sets_with_storage<> dsu(total);
  for (std::size_t e = 0; e < total; ++e) dsu.make_set(e);
  for (const auto& g : stab_gens) {
    for (std::size_t a = 0; a < di.size(); ++a) {
      const std::size_t ga = static_cast<std::size_t>(pos_i[g(di[a])]);
      for (std::size_t b = 0; b < cols; ++b)
        dsu.union_set(a * cols + b, ga * cols + static_cast<std::size_t>(pos_j[g(dj[b])]));
    }
  }
  std::int64_t roots = 0;
  for (std::size_t e = 0; e < total; ++e) roots += dsu.find_set(e) == e;
  return roots;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<long long> parse_line(const std::string& line, int lineno) {
  std::vector<long long> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

GeneratorFile read_generators(std::istream& in) {
  GeneratorFile f;
  long long count = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto nums = parse_line(line, lineno);
    if (nums.empty()) continue;
    if (count < 0) {
      if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected header 'n g'");
      f.degree = static_cast<int>(nums[0]);
      count = nums[1];
      continue;
    }
    if (static_cast<long long>(nums.size()) != f.degree)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(f.degree) + " images");
    std::vector<int> img(nums.begin(), nums.end());
    try {
      f.gens.emplace_back(std::move(img));
      f.lines.push_back(lineno);
    } catch (const Error&) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": not a permutation");
    }
  }
  if (count < 0) throw Error(ErrorKind::ParseError, "missing header");
  if (static_cast<long long>(f.gens.size()) != count)
    throw Error(ErrorKind::ParseError, "header announces " + std::to_string(count) + " generators, found " + std::to_string(f.gens.size()));
  return f;
}

GeneratorFile read_generators(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return read_generators(in);
}

void write_generators(int degree, std::span<const Permutation> gens, std::ostream& out) {
  out << degree << ' ' << gens.size() << '\n';
  for (const auto& g : gens) {
    for (int i = 0; i < degree; ++i) out << (i ? " " : "") << g(i);
    out << '\n';
  }
}

void write_generators(int degree, std::span<const Permutation> gens, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  write_generators(degree, gens, out);
}

}  // namespace srgta
