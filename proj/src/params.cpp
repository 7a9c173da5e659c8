#include "srgta/params.hpp"

#include "srgta/error.hpp"

namespace srgta {

bool SrgParams::consistent() const {
  if (!(0 <= lambda && lambda < k && k < n && 0 <= mu && mu <= k)) return false;
  return k * (k - lambda - 1) == (n - k - 1) * mu;
}

void SrgParams::validate() const {
  if (!consistent()) throw Error(ErrorKind::InconsistentParams, str());
}

SrgParams SrgParams::complement() const {
  return {n, n - k - 1, n - 2 * k + mu - 2, n - 2 * k + lambda};
}

std::string SrgParams::str() const {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

bool is_primitive(const SrgParams& p) { return p.mu > 0 && p.n - 2 * p.k + p.lambda > 0; }

}  // namespace srgta
