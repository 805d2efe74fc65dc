#pragma once

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "mtzeta/rational.hpp"

namespace mtzeta {

// n! with a process-wide cache of ascending products.  Returns by value; the
// cache is guarded so concurrent callers are safe.
inline integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  static std::mutex mutex;
  static std::vector<integer> cache{integer(1), integer(1)};
  std::scoped_lock lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    cache.push_back(cache.back() * static_cast<int>(cache.size()));
  }
  return cache[n];
}

// (s + a_1 + ... + a_m - 1)! / ((s - 1)! a_1! ... a_m!) for s >= 1 and
// offsets a_k >= 0.  This counts shuffles, so both divisions are exact; the
// checks below guard against implementation bugs rather than bad input.
inline integer multinomial_coefficient(int s, const std::vector<int>& offsets) {
  if (s < 1) throw std::invalid_argument("multinomial_coefficient: s must be >= 1");
  int total = 0;
  for (int a : offsets) {
    if (a < 0) {
      throw std::invalid_argument("multinomial_coefficient: offsets must be >= 0");
    }
    total += a;
  }
  integer result = factorial(s + total - 1);
  integer quotient, remainder;
  boost::multiprecision::divide_qr(result, factorial(s - 1), quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("multinomial_coefficient: inexact division");
  }
  result = quotient;
  for (int a : offsets) {
    boost::multiprecision::divide_qr(result, factorial(a), quotient, remainder);
    if (remainder != 0) {
      throw std::logic_error("multinomial_coefficient: inexact division");
    }
    result = quotient;
  }
  return result;
}

// One term of the partial-fraction expansion below, taken with respect to a
// pivot position j (0-based):
//
//   coefficient * x^{-pivot_exponent} * prod over k != j of x_k^{offsets - s_k}
//
// where x = x_1 + ... + x_m and offsets lists a_k for k != j in ascending k.
struct partial_fraction_term {
  std::size_t pivot;
  std::vector<int> offsets;
  int offset_sum;
  integer coefficient;
  int pivot_exponent;

  friend bool operator==(const partial_fraction_term&,
                         const partial_fraction_term&) = default;
};

// All terms contributed by one pivot j of the identity
//
//   prod_k x_k^{-s_k} = sum over j, sum over 0 <= a_k < s_k (k != j) of
//     M(s_j; a) * x^{-(s_j + A)} * prod_{k != j} x_k^{a_k - s_k}
//
// with A = sum a_k and M the multinomial coefficient above.  The offset
// tuples are emitted in ascending lexicographic order (last position varies
// fastest), which callers rely on for reproducible ordering.  The full
// identity is the concatenation over all pivots; see
// partial_fraction_identity_holds for a direct numeric check.
inline std::vector<partial_fraction_term> partial_fraction_expansion(
    const std::vector<int>& exponents, std::size_t pivot) {
  if (exponents.empty()) {
    throw std::invalid_argument("partial_fraction_expansion: no exponents");
  }
  if (pivot >= exponents.size()) {
    throw std::invalid_argument("partial_fraction_expansion: pivot out of range");
  }
  for (int s : exponents) {
    if (s < 1) {
      throw std::invalid_argument(
          "partial_fraction_expansion: exponents must be >= 1");
    }
  }

  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (k != pivot) others.push_back(k);
  }

  std::vector<partial_fraction_term> terms;
  std::vector<int> offsets(others.size(), 0);
  for (;;) {
    partial_fraction_term term;
    term.pivot = pivot;
    term.offsets = offsets;
    term.offset_sum = 0;
    for (int a : offsets) term.offset_sum += a;
    term.coefficient = multinomial_coefficient(exponents[pivot], offsets);
    term.pivot_exponent = exponents[pivot] + term.offset_sum;
    terms.push_back(std::move(term));

    // Odometer step: bump the last position, carrying leftwards.
    std::size_t i = offsets.size();
    while (i > 0) {
      --i;
      if (++offsets[i] < exponents[others[i]]) break;
      offsets[i] = 0;
      if (i == 0) return terms;
    }
    if (offsets.empty()) return terms;
  }
}

// Evaluates both sides of the expansion at concrete rational points and
// compares them exactly.  Requires every x_k and their total to be nonzero so
// all the negative powers exist.
inline bool partial_fraction_identity_holds(const std::vector<rational>& values,
                                            const std::vector<int>& exponents) {
  if (values.size() != exponents.size() || values.empty()) {
    throw std::invalid_argument(
        "partial_fraction_identity_holds: size mismatch or empty input");
  }
  rational total(0);
  for (const rational& x : values) {
    if (x == 0) {
      throw std::invalid_argument(
          "partial_fraction_identity_holds: values must be nonzero");
    }
    total += x;
  }
  if (total == 0) {
    throw std::invalid_argument(
        "partial_fraction_identity_holds: values must not sum to zero");
  }

  rational lhs(1);
  for (std::size_t k = 0; k < values.size(); ++k) {
    lhs *= pow_exact(values[k], -exponents[k]);
  }

  rational rhs(0);
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (const partial_fraction_term& term : partial_fraction_expansion(exponents, j)) {
      rational contribution(term.coefficient);
      contribution *= pow_exact(total, -term.pivot_exponent);
      std::size_t i = 0;
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (k == j) continue;
        contribution *= pow_exact(values[k], term.offsets[i] - exponents[k]);
        ++i;
      }
      rhs += contribution;
    }
  }
  return lhs == rhs;
}

}  // namespace mtzeta
