#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srgta/error.hpp"
#include "srgta/exactmath.hpp"

namespace srgta {

/// Field policy over the rationals, for the slow exact mode.
class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return Rational(v); }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return 1 / a;
  }
};

/// Reduced echelon basis of a subspace of F^len: every stored vector has a 1 at its
/// pivot and 0 at every other stored vector's pivot; pivots increase.
template <class Field>
class EchelonBasis {
 public:
  using value_type = typename Field::value_type;
  using Vec = std::vector<value_type>;

  EchelonBasis(Field f, std::size_t len) : f_(std::move(f)), len_(len) {}

  std::size_t size() const { return rows_.size(); }
  std::size_t ambient() const { return len_; }
  const Field& field() const { return f_; }
  const std::vector<Vec>& vectors() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  /// Reduces v against the basis in place; v is zero afterwards iff it lay in the span.
  void reduce(Vec& v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const value_type c = v[piv_[r]];
      if (f_.is_zero(c)) continue;
      const Vec& b = rows_[r];
      for (std::size_t i = piv_[r]; i < len_; ++i)
        if (!f_.is_zero(b[i])) v[i] = f_.sub(v[i], f_.mul(c, b[i]));
    }
  }

  bool contains(Vec v) const {
    reduce(v);
    return leading(v) == len_;
  }

  /// span_insert: returns true when the span grew. Errors: DimMismatch.
  bool insert(Vec v) {
    reduce(v);
    const std::size_t p = leading(v);
    if (p == len_) return false;
    const value_type s = f_.inv(v[p]);
    for (std::size_t i = p; i < len_; ++i)
      if (!f_.is_zero(v[i])) v[i] = f_.mul(v[i], s);
    for (auto& b : rows_) {
      const value_type c = b[p];
      if (f_.is_zero(c)) continue;
      for (std::size_t i = p; i < len_; ++i)
        if (!f_.is_zero(v[i])) b[i] = f_.sub(b[i], f_.mul(c, v[i]));
    }
    auto at = std::upper_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + at, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

 private:
  void check(const Vec& v) const {
    if (v.size() != len_)
      throw Error(ErrorKind::DimMismatch, "vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(len_));
  }
  std::size_t leading(const Vec& v) const {
    for (std::size_t i = 0; i < len_; ++i)
      if (!f_.is_zero(v[i])) return i;
    return len_;
  }

  Field f_;
  std::size_t len_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

/// Row-major n x n matrix over `f` from an integer matrix.
template <class Field>
std::vector<typename Field::value_type> to_field(const Field& f, std::span<const std::int64_t> m) {
  std::vector<typename Field::value_type> v;
  v.reserve(m.size());
  for (std::int64_t x : m) v.push_back(f.from_int(x));
  return v;
}

/// Dense product a*b of row-major n x n matrices.
template <class Field>
std::vector<typename Field::value_type> mat_mul(const Field& f, const std::vector<typename Field::value_type>& a,
                                                const std::vector<typename Field::value_type>& b, std::size_t n) {
  std::vector<typename Field::value_type> c(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a[i * n + k];
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!f.is_zero(b[k * n + j])) c[i * n + j] = f.add(c[i * n + j], f.mul(x, b[k * n + j]));
    }
  return c;
}

namespace detail {

// Nonzeros of each row of a matrix, for right multiplication.
template <class Field>
struct RowSparse {
  std::vector<std::vector<std::pair<std::size_t, typename Field::value_type>>> rows;
};

template <class Field>
RowSparse<Field> row_sparse(const Field& f, const std::vector<typename Field::value_type>& m, std::size_t n) {
  RowSparse<Field> s;
  s.rows.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (!f.is_zero(m[k * n + j])) s.rows[k].emplace_back(j, m[k * n + j]);
  return s;
}

template <class Field>
std::vector<typename Field::value_type> mul_sparse(const Field& f, const std::vector<typename Field::value_type>& x,
                                                   const RowSparse<Field>& g, std::size_t n) {
  std::vector<typename Field::value_type> c(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = x[i * n + k];
      if (f.is_zero(a)) continue;
      for (const auto& [j, b] : g.rows[k]) c[i * n + j] = f.add(c[i * n + j], f.mul(a, b));
    }
  return c;
}

}  // namespace detail

/// The unital algebra generated by `gens` (row-major n x n matrices). Each new basis
/// element is multiplied on the right by every generator until the span stops growing;
/// since the identity is included this spans every word in the generators.
/// Errors: ClosureBudgetExceeded when the dimension passes `cap` (default 4n), DimMismatch.
template <class Field>
EchelonBasis<Field> algebra_closure(const Field& f, const std::vector<std::vector<typename Field::value_type>>& gens,
                                    std::size_t n, std::size_t cap = 0) {
  using Vec = std::vector<typename Field::value_type>;
  if (cap == 0) cap = 4 * n;
  EchelonBasis<Field> basis(f, n * n);
  std::vector<detail::RowSparse<Field>> kernels;
  for (const auto& g : gens) {
    if (g.size() != n * n) throw Error(ErrorKind::DimMismatch, "generator is not n x n");
    kernels.push_back(detail::row_sparse(f, g, n));
  }

  std::vector<Vec> pending;
  // The reduced residue spans the same new direction as v, so it is what gets multiplied later.
  auto push = [&](Vec v) {
    basis.reduce(v);
    if (std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); })) return;
    basis.insert(v);
    if (basis.size() > cap)
      throw Error(ErrorKind::ClosureBudgetExceeded, "algebra dimension exceeds " + std::to_string(cap));
    pending.push_back(std::move(v));
  };

  Vec id(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = f.one();
  push(id);
  for (const auto& g : gens) push(g);
  while (!pending.empty()) {
    Vec x = std::move(pending.back());
    pending.pop_back();
    for (const auto& k : kernels) push(detail::mul_sparse(f, x, k, n));
  }
  return basis;
}

/// Cells of a partition of 0..n-1 given as diagonal 0/1 idempotents (row-major n x n).
/// Errors: NotIdempotent, NotPartitionOfIdentity.
template <class Field>
std::array<std::vector<std::size_t>, 3> idempotent_cells(const Field& f,
                                                          const std::array<std::vector<typename Field::value_type>, 3>& e,
                                                          std::size_t n) {
  std::array<std::vector<std::size_t>, 3> cells;
  std::vector<int> owner(n, -1);
  for (int c = 0; c < 3; ++c) {
    if (e[c].size() != n * n) throw Error(ErrorKind::DimMismatch, "idempotent is not n x n");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& x = e[c][i * n + j];
        if (f.is_zero(x)) continue;
        if (i != j || x != f.one()) throw Error(ErrorKind::NotIdempotent, "expected a diagonal 0/1 matrix");
        if (owner[i] >= 0) throw Error(ErrorKind::NotPartitionOfIdentity, "idempotents overlap");
        owner[i] = c;
        cells[c].push_back(i);
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (owner[i] < 0) throw Error(ErrorKind::NotPartitionOfIdentity, "idempotents do not sum to I");
  return cells;
}

/// Entry (i,j) is dim span{E_i b E_j : b in basis}.
template <class Field>
std::array<std::array<std::int64_t, 3>, 3> block_dims(const EchelonBasis<Field>& basis,
                                                      const std::array<std::vector<typename Field::value_type>, 3>& e,
                                                      std::size_t n) {
  const Field& f = basis.field();
  if (basis.ambient() != n * n) throw Error(ErrorKind::DimMismatch, "basis is not over n x n matrices");
  auto cells = idempotent_cells(f, e, n);
  std::array<std::array<std::int64_t, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EchelonBasis<Field> blk(f, cells[i].size() * cells[j].size());
      if (blk.ambient() == 0) continue;
      for (const auto& b : basis.vectors()) {
        std::vector<typename Field::value_type> v;
        v.reserve(blk.ambient());
        for (std::size_t r : cells[i])
          for (std::size_t c : cells[j]) v.push_back(b[r * n + c]);
        blk.insert(std::move(v));
      }
      out[i][j] = static_cast<std::int64_t>(blk.size());
    }
  return out;
}

}  // namespace srgta
