#include "srgta/autgrp.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <numeric>
#include <optional>

#include <boost/pending/disjoint_sets.hpp>

#include "srgta/error.hpp"

namespace srgta {

ColoredPartition ColoredPartition::unit(int n) {
  ColoredPartition p;
  p.lab.resize(static_cast<std::size_t>(n));
  std::iota(p.lab.begin(), p.lab.end(), 0);
  p.cell.assign(static_cast<std::size_t>(n), 0);
  p.len.assign(static_cast<std::size_t>(n), 0);
  if (n > 0) {
    p.len[0] = n;
    p.cells = 1;
  }
  return p;
}

ColoredPartition ColoredPartition::from_colours(const std::vector<int>& colour) {
  const int n = static_cast<int>(colour.size());
  ColoredPartition p = unit(n);
  std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  p.cells = 0;
  std::fill(p.len.begin(), p.len.end(), 0);
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[p.lab[j]] == colour[p.lab[i]]) ++j;
    p.len[i] = j - i;
    for (int t = i; t < j; ++t) p.cell[p.lab[t]] = i;
    ++p.cells;
    i = j;
  }
  return p;
}

std::vector<std::vector<int>> ColoredPartition::cell_list() const {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < lab.size(); i += static_cast<std::size_t>(len[i]))
    out.emplace_back(lab.begin() + static_cast<std::ptrdiff_t>(i), lab.begin() + static_cast<std::ptrdiff_t>(i) + len[i]);
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over the running value
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), n_(g.order()), words_(g.words()), wbits_(static_cast<std::size_t>(words_)),
        count_(static_cast<std::size_t>(n_)), queued_(static_cast<std::size_t>(n_)) {}

  /// Refines p in place starting from the given splitter cells; returns a trace hash.
  std::uint64_t run(ColoredPartition& p, std::deque<int> queue) {
    std::uint64_t trace = 0;
    std::fill(queued_.begin(), queued_.end(), 0);
    for (int s : queue) queued_[s] = 1;
    while (!queue.empty() && !p.discrete()) {
      const int w = queue.front();
      queue.pop_front();
      queued_[w] = 0;
      std::fill(wbits_.begin(), wbits_.end(), 0);
      for (int t = w; t < w + p.len[w]; ++t) wbits_[p.lab[t] >> 6] |= Graph::Word{1} << (p.lab[t] & 63);

      for (int s = 0; s < n_;) {
        const int len = p.len[s];
        if (len > 1) split(p, s, len, queue, trace);
        s += len;
      }
    }
    return mix(trace, static_cast<std::uint64_t>(p.cells));
  }

 private:
  void split(ColoredPartition& p, int s, int len, std::deque<int>& queue, std::uint64_t& trace) {
    bool uniform = true;
    for (int t = s; t < s + len; ++t) {
      const int v = p.lab[t];
      const Graph::Word* r = g_.row(v);
      int c = 0;
      for (int i = 0; i < words_; ++i) c += std::popcount(r[i] & wbits_[i]);
      count_[v] = c;
      if (c != count_[p.lab[s]]) uniform = false;
    }
    if (uniform) return;

    auto first = p.lab.begin() + s;
    std::sort(first, first + len, [&](int a, int b) { return count_[a] != count_[b] ? count_[a] < count_[b] : a < b; });
    const bool was_queued = queued_[s] != 0;
    int largest = s, largest_len = 0;
    std::vector<int> starts;
    for (int t = s; t < s + len;) {
      int u = t;
      while (u < s + len && count_[p.lab[u]] == count_[p.lab[t]]) ++u;
      p.len[t] = u - t;
      for (int x = t; x < u; ++x) p.cell[p.lab[x]] = t;
      trace = mix(mix(mix(trace, static_cast<std::uint64_t>(t)), static_cast<std::uint64_t>(count_[p.lab[t]])),
                  static_cast<std::uint64_t>(u - t));
      if (u - t > largest_len) {
        largest_len = u - t;
        largest = t;
      }
      starts.push_back(t);
      t = u;
    }
    p.cells += static_cast<int>(starts.size()) - 1;
    for (int t : starts) {
      if (queued_[t]) continue;
      if (!was_queued && t == largest) continue;
      queued_[t] = 1;
      queue.push_back(t);
    }
  }

  const Graph& g_;
  int n_;
  int words_;
  std::vector<Graph::Word> wbits_;
  std::vector<int> count_;
  std::vector<char> queued_;
};

void individualize(ColoredPartition& p, int v) {
  const int s = p.cell[v];
  const int len = p.len[s];
  auto it = std::find(p.lab.begin() + s, p.lab.begin() + s + len, v);
  std::iter_swap(p.lab.begin() + s, it);
  p.len[s] = 1;
  p.len[s + 1] = len - 1;
  for (int t = s + 1; t < s + len; ++t) p.cell[p.lab[t]] = s + 1;
  ++p.cells;
}

// First smallest non-singleton cell.
int target_cell(const ColoredPartition& p) {
  int best = -1, best_len = 0;
  for (std::size_t s = 0; s < p.lab.size(); s += static_cast<std::size_t>(p.len[s])) {
    int len = p.len[s];
    if (len > 1 && (best < 0 || len < best_len)) {
      best = static_cast<int>(s);
      best_len = len;
    }
  }
  return best;
}

struct TimedOut {};

class Search {
 public:
  Search(const Graph& g, const AutOptions& opts)
      : g_(g), n_(g.order()), refiner_(g), deadline_(std::chrono::steady_clock::now() + opts.timeout) {}

  AutResult run() {
    AutResult res;
    if (n_ <= 1) return res;
    try {
      build_first_path();
      for (auto level = static_cast<std::ptrdiff_t>(path_vertex_.size()) - 1; level >= 0; --level)
        process_level(static_cast<std::size_t>(level));
    } catch (const TimedOut&) {
      res.complete = false;
    }
    res.gens = std::move(gens_);
    res.nodes = nodes_;
    return res;
  }

 private:
  void tick() {
    ++nodes_;
    if ((nodes_ & 63) == 0 && std::chrono::steady_clock::now() > deadline_) throw TimedOut{};
  }

  void build_first_path() {
    ColoredPartition p = ColoredPartition::unit(n_);
    std::uint64_t h = refiner_.run(p, {0});
    for (;;) {
      tick();
      path_part_.push_back(p);
      path_hash_.push_back(h);
      if (p.discrete()) break;
      const int s = target_cell(p);
      const int v = p.lab[s];
      path_vertex_.push_back(v);
      individualize(p, v);
      h = mix(h, refiner_.run(p, {s}));
    }
    first_leaf_ = p.lab;
  }

  void process_level(std::size_t level) {
    const ColoredPartition& base = path_part_[level];
    const int s = target_cell(base);
    const int v = path_vertex_[level];
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    const int len = base.len[s];
    for (int t = 0; t < len; ++t) pos[base.lab[s + t]] = t;

    // Known generators all fix the first `level` path vertices.
    boost::disjoint_sets_with_storage<> orbits(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) orbits.make_set(static_cast<std::size_t>(t));
    auto merge_with = [&](const Permutation& gamma) {
      for (int t = 0; t < len; ++t) orbits.union_set(static_cast<std::size_t>(t), static_cast<std::size_t>(pos[gamma(base.lab[s + t])]));
    };
    for (const auto& gamma : gens_) merge_with(gamma);

    std::vector<char> failed(static_cast<std::size_t>(len), 0);
    for (int t = 0; t < len; ++t) {
      const int w = base.lab[s + t];
      if (w == v) continue;
      auto root = [&](int x) { return orbits.find_set(static_cast<std::size_t>(pos[x])); };
      if (root(w) == root(v)) continue;
      bool known_bad = false;
      for (int u = 0; u < len && !known_bad; ++u)
        known_bad = failed[u] && root(base.lab[s + u]) == root(w);
      if (known_bad) continue;

      ColoredPartition child = base;
      individualize(child, w);
      std::uint64_t h = mix(path_hash_[level], refiner_.run(child, {s}));
      if (auto gamma = find_leaf(child, h, level + 1)) {
        merge_with(*gamma);
        gens_.push_back(std::move(*gamma));
      } else {
        failed[t] = 1;
      }
    }
  }

  std::optional<Permutation> find_leaf(ColoredPartition& p, std::uint64_t h, std::size_t depth) {
    tick();
    if (depth >= path_hash_.size() || h != path_hash_[depth] || p.cells != path_part_[depth].cells) return std::nullopt;
    if (p.discrete()) {
      std::vector<int> img(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) img[first_leaf_[i]] = p.lab[i];
      Permutation gamma(std::move(img));
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    const int s = target_cell(p);
    if (s != target_cell(path_part_[depth])) return std::nullopt;
    const int len = p.len[s];
    std::vector<int> members(p.lab.begin() + s, p.lab.begin() + s + len);
    for (int w : members) {
      ColoredPartition child = p;
      individualize(child, w);
      std::uint64_t hc = mix(h, refiner_.run(child, {s}));
      if (auto gamma = find_leaf(child, hc, depth + 1)) return gamma;
    }
    return std::nullopt;
  }

  const Graph& g_;
  int n_;
  Refiner refiner_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;

  std::vector<ColoredPartition> path_part_;
  std::vector<std::uint64_t> path_hash_;
  std::vector<int> path_vertex_;
  std::vector<int> first_leaf_;
  std::vector<Permutation> gens_;
};

}  // namespace

ColoredPartition refine(const Graph& g, const ColoredPartition& p) {
  ColoredPartition out = p;
  std::deque<int> queue;
  for (std::size_t s = 0; s < out.lab.size(); s += static_cast<std::size_t>(out.len[s])) queue.push_back(static_cast<int>(s));
  Refiner(g).run(out, std::move(queue));
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  if (perm.degree() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) != g.degree(perm(u))) return false;
    for (int v : g.neighbours(u))
      if (!g.adjacent(perm(u), perm(v))) return false;
  }
  return true;
}

AutResult automorphism_group(const Graph& g, const AutOptions& opts) {
  const std::int64_t limit = size_guard(2500);
  if (g.order() > limit)
    throw Error(ErrorKind::SizeGuardExceeded, "automorphism search limited to " + std::to_string(limit) + " vertices");
  return Search(g, opts).run();
}

std::vector<Permutation> import_generators(std::istream& in, const Graph& g) {
  GeneratorFile f = read_generators(in);
  if (f.degree != g.order())
    throw Error(ErrorKind::DegreeMismatch, "generator degree " + std::to_string(f.degree) + " vs graph order " + std::to_string(g.order()));
  for (std::size_t i = 0; i < f.gens.size(); ++i)
    if (!is_automorphism(g, f.gens[i]))
      throw Error(ErrorKind::NotAnAutomorphism, "generator " + std::to_string(i + 1) + " on line " + std::to_string(f.lines[i]));
  return f.gens;
}

std::vector<Permutation> import_generators(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  return import_generators(in, g);
}

}  // namespace srgta
