#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mtzeta/indices.hpp"
#include "mtzeta/partial_fraction.hpp"
#include "mtzeta/rational.hpp"
#include "mtzeta/term_map.hpp"

namespace mtzeta {

// The reduction works level by level.  Applying the partial-fraction identity
// to all r free variables of T(s_1,...,s_r; s) turns it into a combination of
// level-(r-1) sums; applying it to the l free variables of a level-l sum
// lowers the level by one; and a level-1 sum is a multiple zeta value read
// backwards.  Every step only adds nonnegative integer multiples of same
// weight, same depth indices, so the final combination has nonnegative
// integer coefficients and is weight- and depth-homogeneous.

namespace detail {

// Shared core of expand_mt and zeta_product: expand the free variables
// x_1,...,x_r with exponents s_k against their total x.  The pivot variable j
// is absorbed into the total, which ends with exponent base + s_j + A (base
// is the exponent the total already carried); the others keep s_k - a_k >= 1.
// The result is a combination of level-(r-1) sums whose last argument is the
// total's exponent.
inline tl_combination expand_against_total(const std::vector<int>& exponents,
                                           int base) {
  const std::size_t r = exponents.size();
  tl_combination out;
  for (std::size_t j = 0; j < r; ++j) {
    for (const partial_fraction_term& term :
         partial_fraction_expansion(exponents, j)) {
      std::vector<int> args;
      args.reserve(r);
      std::size_t i = 0;
      for (std::size_t k = 0; k < r; ++k) {
        if (k == j) continue;
        args.push_back(exponents[k] - term.offsets[i]);
        ++i;
      }
      args.push_back(base + exponents[j] + term.offset_sum);
      out.add(tl_index(std::move(args), static_cast<int>(r) - 1),
              rational(term.coefficient));
    }
  }
  return out;
}

}  // namespace detail

// First pass: expand all r free variables of an mt_index against their total,
// yielding level-(r-1) sums.  Depth-1 values have nothing to expand (they are
// already single zetas via T(s_1; s) = Z(s_1 + s)); use reduce() for the
// uniform entry point.
inline tl_combination expand_mt(const mt_index& t) {
  if (t.depth() < 2) {
    throw std::invalid_argument("expand_mt: depth must be at least 2");
  }
  return detail::expand_against_total(t.args(), t.last());
}

// Later passes: expand the l free variables of a level-l sum against their
// own total n_l.  Positions past l ride along unchanged; the pivot position
// is replaced by n_l^{-(s_j + A)}, which slots in as the new last cumulative
// variable of a level-(l-1) sum.  Requires level >= 2; level-1 sums are
// finished (see level_one_mzv).
inline tl_combination lower_level(const tl_index& t) {
  if (t.level() < 2) {
    throw std::invalid_argument("lower_level: level must be at least 2");
  }
  const std::vector<int>& s = t.args();
  const std::size_t l = static_cast<std::size_t>(t.level());
  const std::vector<int> head(s.begin(), s.begin() + l);
  tl_combination out;
  for (std::size_t j = 0; j < l; ++j) {
    for (const partial_fraction_term& term : partial_fraction_expansion(head, j)) {
      std::vector<int> args;
      args.reserve(s.size());
      std::size_t i = 0;
      for (std::size_t k = 0; k < l; ++k) {
        if (k == j) continue;
        args.push_back(head[k] - term.offsets[i]);
        ++i;
      }
      args.push_back(head[j] + term.offset_sum);
      args.insert(args.end(), s.begin() + l, s.end());
      out.add(tl_index(std::move(args), static_cast<int>(l) - 1),
              rational(term.coefficient));
    }
  }
  return out;
}

// A level-1 sum runs over n_1 < n_2 < ... < n_r, so reversing its arguments
// gives the standard largest-variable-first multiple zeta value.
inline mzv_index level_one_mzv(const tl_index& t) {
  if (t.level() != 1) {
    throw std::invalid_argument("level_one_mzv: level must be exactly 1");
  }
  std::vector<int> reversed(t.args().rbegin(), t.args().rend());
  return mzv_index(std::move(reversed));
}

// Drives lower_level to completion and converts the surviving level-1 terms.
// All keys of the input share one level because each rewrite pass produces
// keys one level down from its input.
inline mzv_combination reduce_levels(tl_combination combination) {
  while (!combination.empty() && combination.begin()->first.level() > 1) {
    tl_combination next;
    for (const auto& [key, coeff] : combination) {
      next.add_scaled(lower_level(key), coeff);
    }
    combination = std::move(next);
  }
  mzv_combination out;
  for (const auto& [key, coeff] : combination) {
    out.add(level_one_mzv(key), coeff);
  }
  return out;
}

// Full reduction of a Mordell-Tornheim value to multiple zeta values of the
// same weight and depth.  Depth 1 is immediate; otherwise one expand_mt pass
// followed by level lowering.  Coefficients are always positive integers.
inline mzv_combination reduce(const mt_index& t) {
  if (t.depth() == 1) {
    mzv_combination out;
    out.add(mzv_index({t.args().front() + t.last()}), rational(1));
    return out;
  }
  return reduce_levels(expand_mt(t));
}

// T(1,...,1; s) with r ones collapses to a single term: every one of the r!
// orderings of the free variables contributes the same nested sum,
//
//   T(1,...,1; s) = r! * Z(s+1, 1, ..., 1)   (r-1 trailing ones).
//
// Kept independent of the rewrite machinery so the two can cross-check each
// other.
inline mzv_combination all_ones_reduction(int depth, int last) {
  if (depth < 1) throw std::invalid_argument("all_ones_reduction: depth must be >= 1");
  if (last < 1) throw std::invalid_argument("all_ones_reduction: last must be >= 1");
  std::vector<int> args(depth, 1);
  args.front() = last + 1;
  mzv_combination out;
  out.add(mzv_index(std::move(args)), rational(factorial(depth)));
  return out;
}

// A product of single zetas zeta(s_1) ... zeta(s_r) expands over the shared
// total exactly like expand_mt with no trailing exponent (base 0), landing in
// level-(r-1) sums; the level machinery finishes the job.  Every s_j must be
// >= 2 (a zeta(1) factor diverges).  For r = 2 this specializes to the
// classical decomposition of zeta(s) zeta(t) into double zetas.
inline mzv_combination zeta_product(const std::vector<int>& exponents) {
  if (exponents.empty()) {
    throw std::invalid_argument("zeta_product: empty factor list");
  }
  for (int s : exponents) {
    if (s < 2) {
      throw std::invalid_argument(
          "zeta_product: every factor needs exponent >= 2; zeta(1) diverges");
    }
  }
  if (exponents.size() == 1) {
    mzv_combination out;
    out.add(mzv_index({exponents.front()}), rational(1));
    return out;
  }
  return reduce_levels(detail::expand_against_total(exponents, 0));
}

// Weight w and depth r of a Mordell-Tornheim value have "opposite parity"
// when w + r is odd; those are the cases conjectured to reduce further to
// lower-depth zetas.  Requires a weight a genuine depth-r index could have.
inline bool opposite_parity(int weight, int depth) {
  if (depth < 1) throw std::invalid_argument("opposite_parity: depth must be >= 1");
  if (weight < depth + 1) {
    throw std::invalid_argument("opposite_parity: weight must be at least depth + 1");
  }
  return (weight + depth) % 2 == 1;
}

}  // namespace mtzeta
