#include "srgta/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "srgta/error.hpp"

namespace srgta {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kSizeGuard = u64{1} << 20;

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto divs = prime_divisors(q);
  if (divs.size() != 1) return std::nullopt;
  int k = 0;
  while (q > 1) {
    q /= divs[0];
    ++k;
  }
  return std::make_pair(divs[0], k);
}

std::uint64_t prime_from_seed(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Stay in [2^61, 2^62) and away from the default prime.
  u64 candidate = (rng() >> 3) | (u64{1} << 61);
  candidate |= 1;
  while (!is_prime(candidate) || candidate == kDefaultPrime) candidate -= 2;
  return candidate;
}

// ---------------------------------------------------------------------------
// QuadExt

namespace {

// Writes d = s^2 * r with r square-free; trial division up to 2^20, then a perfect-square check.
void split_square(BigInt d, BigInt& s, BigInt& r) {
  s = 1;
  for (u64 f = 2; f <= kSizeGuard && BigInt(f) * f <= d; ++f) {
    BigInt ff = BigInt(f) * f;
    while (d % ff == 0) {
      d /= ff;
      s *= f;
    }
  }
  BigInt root = boost::multiprecision::sqrt(d);
  if (root * root == d && d > 1) {
    s *= root;
    d = 1;
  }
  r = d;
}

}  // namespace

QuadExt::QuadExt(Rational a) : a_(std::move(a)) {}

QuadExt::QuadExt(Rational a, Rational b, BigInt disc) : a_(std::move(a)), b_(std::move(b)), d_(std::move(disc)) {
  if (d_ < 0) throw Error(ErrorKind::DiscriminantMismatch, "negative discriminant");
  normalize();
}

QuadExt QuadExt::sqrt(const BigInt& d) { return QuadExt(0, 1, d); }

void QuadExt::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  BigInt s, r;
  split_square(d_, s, r);
  b_ *= Rational(s);
  d_ = r;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

bool QuadExt::is_integer() const {
  return is_rational() && boost::multiprecision::denominator(a_) == 1;
}

const BigInt& QuadExt::common_disc(const QuadExt& o) const {
  if (is_rational()) return o.d_;
  if (o.is_rational() || o.d_ == d_) return d_;
  throw Error(ErrorKind::DiscriminantMismatch, "sqrt(" + d_.str() + ") vs sqrt(" + o.d_.str() + ")");
}

int QuadExt::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

long double QuadExt::to_long_double() const {
  long double v = a_.convert_to<long double>();
  if (!is_rational()) v += b_.convert_to<long double>() * std::sqrt(d_.convert_to<long double>());
  return v;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << a_;
    return os.str();
  }
  if (a_ != 0) os << a_ << (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) os << "-";
  Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) os << mag << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  BigInt d = common_disc(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  BigInt d = common_disc(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = b_ == 0 ? BigInt(0) : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  Rational nrm = o.norm();
  if (nrm == 0) throw Error(ErrorKind::DivisionByZero, "QuadExt division by zero");
  *this *= o.conjugate();
  a_ /= nrm;
  b_ /= nrm;
  return *this;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p >= (u64{1} << 63)) throw Error(ErrorKind::NotPrime, std::to_string(p));
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::pow(value_type a, std::uint64_t e) const { return powmod(a, e, p_); }

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero mod p");
  return powmod(a, p_ - 2, p_);
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p)

namespace poly {

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

}  // namespace

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  std::size_t k = f.size() - 1;  // f monic
  for (std::size_t i = prod.size(); i-- > k;) {
    u64 c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      std::size_t idx = i - k + j;
      prod[idx] = (prod[idx] + p - mulmod(c, f[j], p)) % p;
    }
  }
  prod.resize(std::min(prod.size(), k));
  trim(prod);
  return prod;
}

Poly pow_mod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly rem(Poly a, const Poly& b, u64 p) {
  trim(a);
  u64 lead_inv = powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  for (u64 a = 0; a < p; ++a) {  // root scan
    u64 v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (mulmod(v, a, p) + f[i]) % p;
    if (v == 0) return false;
  }
  auto minus_x = [&](Poly h) {
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  // frob[j] = x^(p^j) mod f
  std::vector<Poly> frob(k + 1);
  frob[0] = {0, 1};
  for (std::size_t j = 1; j <= k; ++j) frob[j] = pow_mod(frob[j - 1], p, f, p);
  if (!minus_x(frob[k]).empty()) return false;
  for (u64 r : prime_divisors(k)) {
    if (gcd(f, minus_x(frob[k / r]), p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

// ---------------------------------------------------------------------------
// FiniteField

namespace {

poly::Poly decode(u64 a, u64 p, int k) {
  poly::Poly c(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    c[i] = a % p;
    a /= p;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

u64 encode(const poly::Poly& c, const std::vector<u64>& pow_p) {
  u64 a = 0;
  for (std::size_t i = 0; i < c.size(); ++i) a += c[i] * pow_p[i];
  return a;
}

}  // namespace

FiniteField gf_construct(std::uint64_t p, int k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (k < 1) throw Error(ErrorKind::DegreeZero, "field degree must be positive");
  u64 q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > kSizeGuard / p) throw Error(ErrorKind::SizeGuardExceeded, "p^k exceeds 2^20");
    q *= p;
  }

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  f.pow_p_.resize(static_cast<std::size_t>(k) + 1);
  f.pow_p_[0] = 1;
  for (int i = 1; i <= k; ++i) f.pow_p_[i] = f.pow_p_[i - 1] * p;

  // Monic candidates x^k + (lower part); the lower part's encoding is the lexicographic rank.
  for (u64 lower = 0; lower < q; ++lower) {
    poly::Poly cand(static_cast<std::size_t>(k) + 1, 0);
    u64 t = lower;
    for (int i = 0; i < k; ++i) {
      cand[i] = t % p;
      t /= p;
    }
    cand[k] = 1;
    if (poly::is_irreducible(cand, p)) {
      f.modulus_ = cand;
      break;
    }
  }

  auto slow_mul = [&](u64 a, u64 b) {
    return encode(poly::mul_mod(decode(a, p, k), decode(b, p, k), f.modulus_, p), f.pow_p_);
  };
  auto slow_pow = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const auto divisors = prime_divisors(q - 1);
  for (u64 g = 1; g < q; ++g) {
    bool primitive = std::all_of(divisors.begin(), divisors.end(),
                                 [&](u64 r) { return slow_pow(g, (q - 1) / r) != 1; });
    if (primitive) {
      f.generator_ = static_cast<FiniteField::Element>(g);
      break;
    }
  }

  f.exp_.resize(q - 1);
  f.log_.assign(q, 0);
  u64 x = 1;
  for (u64 i = 0; i + 1 < q; ++i) {
    f.exp_[i] = static_cast<FiniteField::Element>(x);
    f.log_[x] = i;
    x = slow_mul(x, f.generator_);
  }
  return f;
}

FiniteField gf_of_order(std::uint64_t q) {
  auto pk = prime_power(q);
  if (!pk) throw Error(ErrorKind::NotPrimePower, std::to_string(q));
  return gf_construct(pk->first, pk->second);
}

FiniteField::Element gf_primitive_element(const FiniteField& f) { return f.primitive_element(); }

FiniteField::Element FiniteField::from_int(std::int64_t v) const {
  auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (k_ == 1) return static_cast<Element>((u64{a} + b) % p_);
  u64 r = 0;
  for (int i = 0; i < k_; ++i) {
    u64 da = a % p_, db = b % p_;
    a = static_cast<Element>(a / p_);
    b = static_cast<Element>(b / p_);
    r += ((da + db) % p_) * pow_p_[i];
  }
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::neg(Element a) const {
  u64 r = 0;
  for (int i = 0; i < k_; ++i) {
    u64 da = a % p_;
    a = static_cast<Element>(a / p_);
    r += ((p_ - da) % p_) * pow_p_[i];
  }
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in GF(q)");
  u64 l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1 - l)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>((static_cast<u128>(log_[a]) * e) % (q_ - 1))];
}

std::uint64_t FiniteField::multiplicative_order(Element a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "zero has no multiplicative order");
  return (q_ - 1) / std::gcd(q_ - 1, log_[a]);
}

bool FiniteField::is_square(Element a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;
  return log_[a] % 2 == 0;
}

FiniteField::Element FiniteField::primitive_element() const {
  if (q_ < 3) throw Error(ErrorKind::TrivialField, "GF(" + std::to_string(q_) + ")");
  return generator_;
}

std::vector<std::uint64_t> FiniteField::coefficients(Element a) const {
  std::vector<u64> c(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a = static_cast<Element>(a / p_);
  }
  return c;
}

FiniteField::Element FiniteField::from_coefficients(std::span<const std::uint64_t> c) const {
  u64 a = 0;
  for (std::size_t i = 0; i < c.size() && i < static_cast<std::size_t>(k_); ++i) a += (c[i] % p_) * pow_p_[i];
  return static_cast<Element>(a);
}

std::string FiniteField::element_str(Element a) const {
  if (k_ == 1) return std::to_string(a);
  auto c = coefficients(a);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

std::pair<QuadExt, QuadExt> srg_eigenvalues(const SrgParams& params) {
  if (params.k * (params.k - params.lambda - 1) != (params.n - params.k - 1) * params.mu)
    throw Error(ErrorKind::InconsistentParams, params.str());
  std::int64_t diff = params.lambda - params.mu;
  BigInt disc = BigInt(diff) * diff + 4 * BigInt(params.k - params.mu);
  QuadExt root = QuadExt::sqrt(disc);
  QuadExt half(Rational(1, 2));
  QuadExt theta = (QuadExt(diff) + root) * half;
  QuadExt tau = (QuadExt(diff) - root) * half;
  return {theta, tau};
}

}  // namespace srgta
