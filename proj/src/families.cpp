#include "srgta/families.hpp"

#include <algorithm>
#include <unordered_map>

#include "srgta/error.hpp"
#include "srgta/exactmath.hpp"

namespace srgta {

namespace {

using Element = FiniteField::Element;

constexpr std::int64_t kAffineGuard = std::int64_t{1} << 14;
constexpr std::int64_t kGrassmannGuard = 5000;
constexpr std::int64_t kPolarGuard = 2000;

void check_guard(const BigInt& count, std::int64_t fallback, const std::string& what) {
  std::int64_t limit = size_guard(fallback);
  if (count > limit)
    throw Error(ErrorKind::SizeGuardExceeded, what + " would have " + count.str() + " vertices (limit " + std::to_string(limit) + ")");
}

BigInt big_pow(std::uint64_t q, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// GF(q)^dim, vectors numbered in mixed radix (coordinate 0 least significant).
class VectorSpace {
 public:
  VectorSpace(const FiniteField& f, int dim) : f_(f), dim_(dim), q_(f.size()) {
    size_ = 1;
    for (int i = 0; i < dim; ++i) size_ *= q_;
    if (q_ <= 256) {
      sub_.resize(q_ * q_);
      for (std::uint64_t a = 0; a < q_; ++a)
        for (std::uint64_t b = 0; b < q_; ++b) sub_[a * q_ + b] = f.sub(static_cast<Element>(a), static_cast<Element>(b));
    }
  }

  std::uint64_t size() const { return size_; }
  int dim() const { return dim_; }

  std::vector<Element> coords(std::uint64_t x) const {
    std::vector<Element> c(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      c[i] = static_cast<Element>(x % q_);
      x /= q_;
    }
    return c;
  }

  std::uint64_t index(const std::vector<Element>& c) const {
    std::uint64_t x = 0;
    for (int i = dim_; i-- > 0;) x = x * q_ + c[i];
    return x;
  }

  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const {
    std::uint64_t r = 0, scale = 1;
    for (int i = 0; i < dim_; ++i) {
      auto a = static_cast<Element>(x % q_);
      auto b = static_cast<Element>(y % q_);
      x /= q_;
      y /= q_;
      r += scale * (sub_.empty() ? f_.sub(a, b) : sub_[a * q_ + b]);
      scale *= q_;
    }
    return r;
  }

 private:
  const FiniteField& f_;
  int dim_;
  std::uint64_t q_;
  std::uint64_t size_;
  std::vector<Element> sub_;
};

// Cayley graph on (GF(q)^dim, +); `in_s` must be closed under negation and miss 0.
Graph cayley(const VectorSpace& vs, const std::vector<char>& in_s) {
  const int n = static_cast<int>(vs.size());
  Graph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (in_s[vs.sub(static_cast<std::uint64_t>(y), static_cast<std::uint64_t>(x))]) g.add_edge(x, y);
  return g;
}

// Least a for which x^2 + xy + a y^2 is anisotropic, i.e. t^2 + t + a has no root.
Element anisotropic_coefficient(const FiniteField& f) {
  for (Element a = 0; a < f.size(); ++a) {
    bool has_root = false;
    for (Element t = 0; t < f.size() && !has_root; ++t)
      has_root = f.add(f.add(f.mul(t, t), t), a) == 0;
    if (!has_root) return a;
  }
  throw Error(ErrorKind::InternalDisagreement, "no anisotropic binary form");
}

// Q+ = sum x_{2i} x_{2i+1}; Q- replaces the last pair by x^2 + xy + a y^2.
Element quadratic_form(const FiniteField& f, int eps, Element a, const std::vector<Element>& x) {
  const int m = static_cast<int>(x.size()) / 2;
  Element s = 0;
  int hyperbolic = eps > 0 ? m : m - 1;
  for (int i = 0; i < hyperbolic; ++i) s = f.add(s, f.mul(x[2 * i], x[2 * i + 1]));
  if (eps < 0) {
    Element u = x[2 * m - 2], v = x[2 * m - 1];
    s = f.add(s, f.add(f.add(f.mul(u, u), f.mul(u, v)), f.mul(a, f.mul(v, v))));
  }
  return s;
}

// Scales a nonzero vector so that its first nonzero coordinate is 1.
void normalize_projective(const FiniteField& f, std::vector<Element>& x) {
  auto it = std::find_if(x.begin(), x.end(), [](Element e) { return e != 0; });
  Element s = f.inv(*it);
  for (auto& e : x) e = f.mul(e, s);
}

}  // namespace

// ---------------------------------------------------------------------------

Graph complete_multipartite(int parts, int size) {
  if (parts < 2 || size < 1 || parts * size < 3)
    throw Error(ErrorKind::ParamRange, "complete multipartite needs n >= 2, m >= 1, nm >= 3");
  const int n = parts * size;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / size != v / size) g.add_edge(u, v);
  return g;
}

Graph disjoint_cliques(int count, int size) {
  if (count < 1 || size < 1) throw Error(ErrorKind::ParamRange, "disjoint cliques need positive count and size");
  const int n = count * size;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / size == v / size) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorKind::ParamRange, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph grid(int n) {
  if (n < 2) throw Error(ErrorKind::ParamRange, "grid needs n >= 2");
  check_guard(BigInt(n) * n, kAffineGuard, "grid");
  Graph g(n * n);
  for (int u = 0; u < n * n; ++u)
    for (int v = u + 1; v < n * n; ++v)
      if (u / n == v / n || u % n == v % n) g.add_edge(u, v);
  return g;
}

Graph johnson(int n) {
  if (n < 4) throw Error(ErrorKind::ParamRange, "johnson needs n >= 4");
  check_guard(BigInt(n) * (n - 1) / 2, kGrassmannGuard, "johnson");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const int v = static_cast<int>(pairs.size());
  Graph g(v);
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a == c || a == d || b == c || b == d) g.add_edge(i, j);
    }
  }
  return g;
}

Graph grassmann(std::uint64_t q, int n) {
  FiniteField f = gf_of_order(q);
  if (n < 4) throw Error(ErrorKind::ParamRange, "grassmann needs n >= 4");
  BigInt count = (big_pow(q, n) - 1) * (big_pow(q, n - 1) - 1) / ((BigInt(q) * q - 1) * (q - 1));
  check_guard(count, kGrassmannGuard, "grassmann");

  VectorSpace vs(f, n);
  std::unordered_map<std::uint64_t, std::vector<int>> lines_through;
  int line = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // Free coordinates: row 1 at columns > a other than b, row 2 at columns > b.
      std::vector<int> free1, free2;
      for (int c = a + 1; c < n; ++c)
        if (c != b) free1.push_back(c);
      for (int c = b + 1; c < n; ++c) free2.push_back(c);
      const std::size_t nfree = free1.size() + free2.size();
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < nfree; ++i) combos *= q;
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::vector<Element> r1(n, 0), r2(n, 0);
        r1[a] = 1;
        r2[b] = 1;
        std::uint64_t t = code;
        for (int c : free1) {
          r1[c] = static_cast<Element>(t % q);
          t /= q;
        }
        for (int c : free2) {
          r2[c] = static_cast<Element>(t % q);
          t /= q;
        }
        lines_through[vs.index(r2)].push_back(line);
        for (Element s = 0; s < q; ++s) {
          std::vector<Element> pt(n);
          for (int i = 0; i < n; ++i) pt[i] = f.add(r1[i], f.mul(s, r2[i]));
          lines_through[vs.index(pt)].push_back(line);
        }
        ++line;
      }
    }
  }

  Graph g(line);
  for (const auto& [pt, ls] : lines_through)
    for (std::size_t i = 0; i < ls.size(); ++i)
      for (std::size_t j = i + 1; j < ls.size(); ++j) g.add_edge(ls[i], ls[j]);
  return g;
}

Graph paley(std::uint64_t q) {
  FiniteField f = gf_of_order(q);
  if (q % 4 != 1) throw Error(ErrorKind::BadCongruence, "paley needs q = 1 mod 4, got " + std::to_string(q));
  check_guard(BigInt(q), kAffineGuard, "paley");
  VectorSpace vs(f, 1);
  std::vector<char> in_s(q, 0);
  for (Element x = 1; x < q; ++x) in_s[x] = f.is_square(x) ? 1 : 0;
  return cayley(vs, in_s);
}

Graph peisert(std::uint64_t p, int t) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (p % 4 != 3) throw Error(ErrorKind::BadCongruence, "peisert needs p = 3 mod 4, got " + std::to_string(p));
  if (t < 1) throw Error(ErrorKind::ParamRange, "peisert needs t >= 1");
  BigInt q = big_pow(p, 2 * t);
  check_guard(q, kAffineGuard, "peisert");
  FiniteField f = gf_construct(p, 2 * t);
  Element w = gf_primitive_element(f);
  VectorSpace vs(f, 1);
  std::vector<char> in_s(f.size(), 0);
  Element x = 1;
  for (std::uint64_t i = 0; i + 1 < f.size(); ++i) {
    if (i % 4 == 0 || i % 4 == 1) in_s[x] = 1;
    x = f.mul(x, w);
  }
  return cayley(vs, in_s);
}

Graph affine_polar(int eps, int m, std::uint64_t q) {
  if (eps != 1 && eps != -1) throw Error(ErrorKind::ParamRange, "affine polar needs eps = +1 or -1");
  if (m < 1) throw Error(ErrorKind::ParamRange, "affine polar needs m >= 1");
  FiniteField f = gf_of_order(q);
  check_guard(big_pow(q, 2 * m), kAffineGuard, "affine polar");
  VectorSpace vs(f, 2 * m);
  Element a = eps < 0 ? anisotropic_coefficient(f) : 0;
  std::vector<char> in_s(vs.size(), 0);
  for (std::uint64_t x = 1; x < vs.size(); ++x) in_s[x] = quadratic_form(f, eps, a, vs.coords(x)) == 0 ? 1 : 0;
  return cayley(vs, in_s);
}

Graph o6_minus_collinearity(std::uint64_t q) {
  FiniteField f = gf_of_order(q);
  check_guard((BigInt(q) + 1) * (big_pow(q, 3) + 1), kPolarGuard, "O6-");
  VectorSpace vs(f, 6);
  Element a = anisotropic_coefficient(f);
  std::vector<std::vector<Element>> points;
  for (std::uint64_t x = 1; x < vs.size(); ++x) {
    auto c = vs.coords(x);
    auto lead = std::find_if(c.begin(), c.end(), [](Element e) { return e != 0; });
    if (*lead != 1) continue;
    if (quadratic_form(f, -1, a, c) == 0) points.push_back(std::move(c));
  }
  const int n = static_cast<int>(points.size());
  std::vector<Element> qv(n);
  for (int i = 0; i < n; ++i) qv[i] = quadratic_form(f, -1, a, points[i]);
  Graph g(n);
  std::vector<Element> sum(6);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int c = 0; c < 6; ++c) sum[c] = f.add(points[i][c], points[j][c]);
      // B(x,y) = Q(x+y) - Q(x) - Q(y)
      Element b = f.sub(f.sub(quadratic_form(f, -1, a, sum), qv[i]), qv[j]);
      if (b == 0) g.add_edge(i, j);
    }
  }
  return g;
}

Graph bilinear_forms(std::uint64_t q, int e) {
  FiniteField f = gf_of_order(q);
  if (e < 2) throw Error(ErrorKind::ParamRange, "bilinear forms need e >= 2");
  check_guard(big_pow(q, 2 * e), kAffineGuard, "bilinear forms");
  // Coordinates 0..e-1 are the first row, e..2e-1 the second.
  VectorSpace vs(f, 2 * e);
  std::vector<char> in_s(vs.size(), 0);
  for (std::uint64_t x = 1; x < vs.size(); ++x) {
    auto c = vs.coords(x);
    bool rank_one = true;
    for (int i = 0; i < e && rank_one; ++i)
      for (int j = i + 1; j < e && rank_one; ++j)
        rank_one = f.mul(c[i], c[e + j]) == f.mul(c[j], c[e + i]);
    in_s[x] = rank_one ? 1 : 0;
  }
  return cayley(vs, in_s);
}

// ---------------------------------------------------------------------------

std::string FamilySpec::str() const {
  std::string s = tag + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + std::to_string(args[i]);
  return s + ")";
}

const std::vector<std::string>& family_tags() {
  static const std::vector<std::string> tags = {"multipartite", "cliques", "cycle",  "grid",    "johnson", "grassmann",
                                                "paley",        "peisert", "vo",     "o6minus", "bilinear"};
  return tags;
}

Graph construct(const FamilySpec& spec) {
  const auto& a = spec.args;
  auto need = [&](std::size_t count) {
    if (a.size() != count)
      throw Error(ErrorKind::Usage, spec.tag + " takes " + std::to_string(count) + " integer argument(s)");
    for (long long v : a)
      if (v < -1 || v > (1LL << 30)) throw Error(ErrorKind::ParamRange, spec.str());
  };
  auto uq = [&](std::size_t i) {
    if (a[i] < 0) throw Error(ErrorKind::ParamRange, spec.str());
    return static_cast<std::uint64_t>(a[i]);
  };
  auto ii = [&](std::size_t i) { return static_cast<int>(a[i]); };

  if (spec.tag == "multipartite") return need(2), complete_multipartite(ii(0), ii(1));
  if (spec.tag == "cliques") return need(2), disjoint_cliques(ii(0), ii(1));
  if (spec.tag == "cycle") return need(1), cycle(ii(0));
  if (spec.tag == "grid") return need(1), grid(ii(0));
  if (spec.tag == "johnson") return need(1), johnson(ii(0));
  if (spec.tag == "grassmann") return need(2), grassmann(uq(0), ii(1));
  if (spec.tag == "paley") return need(1), paley(uq(0));
  if (spec.tag == "peisert") return need(2), peisert(uq(0), ii(1));
  if (spec.tag == "vo") return need(3), affine_polar(ii(0), ii(1), uq(2));
  if (spec.tag == "o6minus") return need(1), o6_minus_collinearity(uq(0));
  if (spec.tag == "bilinear") return need(2), bilinear_forms(uq(0), ii(1));
  throw Error(ErrorKind::Usage, "unknown family '" + spec.tag + "'");
}

}  // namespace srgta
