#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace srgta {

/// Parameter tuple (n, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  /// k(k - lambda - 1) = (n - k - 1) mu together with 0 <= lambda < k < n and mu <= k.
  bool consistent() const;

  /// Throws InconsistentParams unless consistent().
  void validate() const;

  SrgParams complement() const;

  std::string str() const;

  auto operator<=>(const SrgParams&) const = default;
};

/// Both graphs of the scheme are connected: mu > 0 and n - 2k + lambda > 0.
bool is_primitive(const SrgParams& p);

}  // namespace srgta
