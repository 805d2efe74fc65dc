#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mtzeta/indices.hpp"
#include "mtzeta/rational.hpp"

namespace mtzeta {

// Convergence certificates for the two series shapes, stated for arbitrary
// rational exponents so they are usable beyond the positive-integer indices
// this library reduces.  Both are sufficient conditions; a failure means the
// certificate does not apply, not that divergence is proven.

// The nested sum Z(sigma_1,...,sigma_r) converges when every leading partial
// sum satisfies sigma_1 + ... + sigma_k > k.  Returns the first (1-based) k
// violating that, or nullopt when all pass.  Order matters: (2,0,2) fails at
// k = 2 even though its sorted cousin (0,2,2)-style bounds would not notice.
inline std::optional<int> mzv_criterion_violation(
    const std::vector<rational>& sigmas) {
  if (sigmas.empty()) {
    throw std::invalid_argument("mzv_criterion_violation: empty exponent list");
  }
  rational partial(0);
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    partial += sigmas[k];
    if (!(partial > static_cast<int>(k) + 1)) {
      return static_cast<int>(k) + 1;
    }
  }
  return std::nullopt;
}

// The free sum T(sigma_1,...,sigma_r; sigma) converges when, after sorting
// the sigma_k ascending, sigma + sigma_1 + ... + sigma_k > k holds for every
// k.  Sorting first makes the certificate symmetric in the sigma_k, matching
// the symmetry of the series itself.  Returns the first failing k (1-based,
// in sorted order) or nullopt.
inline std::optional<int> mt_criterion_violation(std::vector<rational> sigmas,
                                                 const rational& last) {
  if (sigmas.empty()) {
    throw std::invalid_argument("mt_criterion_violation: empty exponent list");
  }
  std::sort(sigmas.begin(), sigmas.end());
  rational partial = last;
  for (std::size_t k = 0; k < sigmas.size(); ++k) {
    partial += sigmas[k];
    if (!(partial > static_cast<int>(k) + 1)) {
      return static_cast<int>(k) + 1;
    }
  }
  return std::nullopt;
}

inline bool mzv_convergence_check(const std::vector<rational>& sigmas) {
  return !mzv_criterion_violation(sigmas).has_value();
}

inline bool mt_convergence_check(const std::vector<rational>& sigmas,
                                 const rational& last) {
  return !mt_criterion_violation(sigmas, last).has_value();
}

namespace detail {

inline std::vector<rational> to_rational_vector(const std::vector<int>& args) {
  std::vector<rational> out;
  out.reserve(args.size());
  for (int a : args) out.emplace_back(a);
  return out;
}

}  // namespace detail

// Overloads for the concrete index types.  For positive integers the nested
// criterion collapses to admissibility (s_1 >= 2), and the free-variable
// criterion always holds; both overloads still run the general check so the
// two code paths cannot drift apart.
inline bool converges(const mzv_index& z) {
  return mzv_convergence_check(detail::to_rational_vector(z.args()));
}

inline bool converges(const mt_index& t) {
  return mt_convergence_check(detail::to_rational_vector(t.args()),
                              rational(t.last()));
}

}  // namespace mtzeta
