#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srgta/params.hpp"

namespace srgta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Elementary number theory on machine integers.

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

/// Largest prime strictly below 2^62; the default modulus for exact rank computations.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

/// A second 62-bit prime, derived deterministically from `seed`.
std::uint64_t prime_from_seed(std::uint64_t seed);

// ---------------------------------------------------------------------------

/// An element a + b*sqrt(D) of a real quadratic field, D square-free.
///
/// Rational values are stored with b = 0 and D = 0. Binary operations between two
/// irrational values require equal D; mixing a rational with anything is always fine.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a);  // NOLINT(google-explicit-constructor)
  QuadExt(long long a) : QuadExt(Rational(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : QuadExt(Rational(a)) {}       // NOLINT(google-explicit-constructor)
  QuadExt(int a) : QuadExt(Rational(a)) {}        // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, BigInt disc);

  /// sqrt(d) for an integer d >= 0.
  static QuadExt sqrt(const BigInt& d);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const BigInt& disc() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const;

  /// Exact sign: -1, 0 or +1.
  int sign() const;
  QuadExt conjugate() const { return is_rational() ? *this : QuadExt(a_, -b_, d_); }
  /// a^2 - b^2 D, the field norm.
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

  long double to_long_double() const;
  std::string str() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

 private:
  void normalize();
  const BigInt& common_disc(const QuadExt& o) const;

  Rational a_ = 0;
  Rational b_ = 0;
  BigInt d_ = 0;
};

// ---------------------------------------------------------------------------

/// Arithmetic modulo a prime below 2^63, elements kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const;
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type pow(value_type a, std::uint64_t e) const;
  value_type inv(value_type a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

// ---------------------------------------------------------------------------

/// GF(p^k) with a deterministic modulus: the least monic irreducible of degree k,
/// polynomials ordered by their coefficient vectors read from the top degree down.
///
/// Elements are encoded as integers c0 + c1 p + ... + c_{k-1} p^{k-1}; this encoding
/// is also the element order used by primitive_element().
class FiniteField {
 public:
  using Element = std::uint32_t;

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  /// Coefficients c0..ck of the monic modulus.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  std::uint64_t multiplicative_order(Element a) const;
  bool is_square(Element a) const;

  /// Least element of multiplicative order |F| - 1. Throws TrivialField for |F| < 3.
  Element primitive_element() const;
  /// The discrete logarithm of a nonzero element to the base primitive_element().
  std::uint64_t log(Element a) const { return log_[a]; }

  std::vector<std::uint64_t> coefficients(Element a) const;
  Element from_coefficients(std::span<const std::uint64_t> c) const;

  std::string element_str(Element a) const;

 private:
  friend FiniteField gf_construct(std::uint64_t p, int k);
  FiniteField() = default;

  std::uint64_t p_ = 0;
  int k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> pow_p_;  // p^i
  Element generator_ = 0;
  std::vector<Element> exp_;
  std::vector<std::uint64_t> log_;
};

/// Builds GF(p^k). Errors: NotPrime, DegreeZero, SizeGuardExceeded (p^k > 2^20).
FiniteField gf_construct(std::uint64_t p, int k);

/// GF(q) for a prime power q. Errors: NotPrimePower plus those of gf_construct.
FiniteField gf_of_order(std::uint64_t q);

FiniteField::Element gf_primitive_element(const FiniteField& f);

/// Polynomials over GF(p), coefficient vectors from the constant term up.
namespace poly {
using Poly = std::vector<std::uint64_t>;
bool is_irreducible(const Poly& f, std::uint64_t p);
}  // namespace poly

// ---------------------------------------------------------------------------

/// Restricted eigenvalues theta > tau: the roots of x^2 - (lambda - mu)x - (k - mu).
std::pair<QuadExt, QuadExt> srg_eigenvalues(const SrgParams& params);

}  // namespace srgta
