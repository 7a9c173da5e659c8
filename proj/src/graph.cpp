#include "srgta/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "srgta/error.hpp"

namespace srgta {

Graph::Graph(int n) : n_(n), w_((n + 63) / 64) {
  if (n < 0) throw Error(ErrorKind::ParamRange, "negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(w_), 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorKind::VertexOutOfRange, std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw Error(ErrorKind::LoopRejected, std::to_string(u));
  rows_[idx(u) + (v >> 6)] |= Word{1} << (v & 63);
  rows_[idx(v) + (u >> 6)] |= Word{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  rows_[idx(u) + (v >> 6)] &= ~(Word{1} << (v & 63));
  rows_[idx(v) + (u >> 6)] &= ~(Word{1} << (u & 63));
}

int Graph::degree(int u) const {
  int d = 0;
  const Word* r = row(u);
  for (int i = 0; i < w_; ++i) d += std::popcount(r[i]);
  return d;
}

int Graph::common_neighbours(int u, int v) const {
  int c = 0;
  const Word* a = row(u);
  const Word* b = row(v);
  for (int i = 0; i < w_; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

std::vector<int> Graph::neighbours(int u) const {
  std::vector<int> out;
  const Word* r = row(u);
  for (int i = 0; i < w_; ++i) {
    Word x = r[i];
    while (x) {
      out.push_back(i * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

std::int64_t Graph::edge_count() const {
  std::int64_t s = 0;
  for (int u = 0; u < n_; ++u) s += degree(u);
  return s / 2;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

// ---------------------------------------------------------------------------

std::variant<SrgParams, NotSrg> is_strongly_regular(const Graph& g) {
  const int n = g.order();
  if (n < 2) return NotSrg{-1, -1, "fewer than two vertices"};
  const int k = g.degree(0);
  for (int u = 1; u < n; ++u)
    if (g.degree(u) != k) return NotSrg{0, u, "not regular"};
  if (k == 0) return NotSrg{-1, -1, "empty graph"};
  if (k == n - 1) return NotSrg{-1, -1, "complete graph"};

  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int c = g.common_neighbours(u, v);
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) slot = c;
      else if (slot != c) return NotSrg{u, v, g.adjacent(u, v) ? "lambda not constant" : "mu not constant"};
    }
  }
  return SrgParams{n, k, lambda, mu};
}

SrgParams require_srg(const Graph& g) {
  auto r = is_strongly_regular(g);
  if (auto* bad = std::get_if<NotSrg>(&r))
    throw Error(ErrorKind::NotSrg, bad->reason + " at (" + std::to_string(bad->u) + "," + std::to_string(bad->v) + ")");
  return std::get<SrgParams>(r);
}

PairCounts pair_counts(const Graph& g) {
  PairCounts pc;
  const int n = g.order();
  for (int u = 0; u < n; ++u) pc.degrees.insert(g.degree(u));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto& bucket = g.adjacent(u, v) ? pc.adjacent : pc.nonadjacent;
      bool fresh = bucket.insert(g.common_neighbours(u, v)).second;
      if (fresh && bucket.size() == 2 && pc.first_u < 0) {
        pc.first_u = u;
        pc.first_v = v;
      }
    }
  }
  return pc;
}

bool is_srg_wide_sense(const Graph& g) {
  auto pc = pair_counts(g);
  return pc.degrees.size() <= 1 && pc.adjacent.size() <= 1 && pc.nonadjacent.size() <= 1;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

// ---------------------------------------------------------------------------

std::span<const int> VertexPartition::operator[](int i) const {
  switch (i) {
    case 0: return delta0_;
    case 1: return delta1;
    default: return delta2;
  }
}

VertexPartition partition_at(const Graph& g, int omega) {
  const int n = g.order();
  if (omega < 0 || omega >= n) throw Error(ErrorKind::VertexOutOfRange, std::to_string(omega));
  VertexPartition p;
  p.omega = omega;
  p.delta0_ = {omega};
  p.cell.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (v == omega) continue;
    if (g.adjacent(omega, v)) {
      p.delta1.push_back(v);
      p.cell[v] = 1;
    } else {
      p.delta2.push_back(v);
      p.cell[v] = 2;
    }
  }
  return p;
}

Subconstituents subconstituents(const Graph& g, int omega) {
  Subconstituents s;
  s.part = partition_at(g, omega);
  s.first = g.induced(s.part.delta1);
  s.second = g.induced(s.part.delta2);
  return s;
}

Graph clique_extension(const Graph& g, int m) {
  if (m < 1) throw Error(ErrorKind::ParamRange, "clique extension needs m >= 1");
  const int n = g.order();
  Graph h(n * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int u = 0; u < n; ++u) {
        if (i != j && i < j) h.add_edge(i * n + u, j * n + u);
        for (int v : g.neighbours(u))
          if (i * n + u < j * n + v) h.add_edge(i * n + u, j * n + v);
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------

namespace {

bool parse_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc()) return false;
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') return false;
    out.push_back(v);
  }
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::vector<long long> nums;
  long long n = -1, m = -1, seen = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (!parse_ints(line, nums))
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected integers");
    if (nums.empty()) continue;
    if (nums.size() != 2) throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected two integers");
    if (n < 0) {
      n = nums[0];
      m = nums[1];
      if (n < 0 || m < 0 || n > (1 << 24))
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": bad header");
      g = Graph(static_cast<int>(n));
      continue;
    }
    long long u = nums[0], v = nums[1];
    if (u == v) throw Error(ErrorKind::LoopRejected, "line " + std::to_string(lineno));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(lineno));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "missing header");
  if (seen != m)
    throw Error(ErrorKind::ParseError, "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbours(u))
      if (u < v) out << u << ' ' << v << '\n';
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  write_graph(g, out);
}

std::int64_t size_guard(std::int64_t fallback) {
  const char* env = std::getenv("SRGTA_SIZE_GUARD");
  if (env == nullptr) return fallback;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
  if (ec != std::errc() || v <= 0) return fallback;
  return v;
}

}  // namespace srgta
