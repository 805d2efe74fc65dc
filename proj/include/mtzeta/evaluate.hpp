#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mtzeta/indices.hpp"
#include "mtzeta/rational.hpp"
#include "mtzeta/reduce.hpp"
#include "mtzeta/term_map.hpp"

namespace mtzeta {

// ---------------------------------------------------------------------------
// Exact truncated summation.
//
// Truncation conventions: free-variable sums (mt_index, tl_index) keep the
// terms whose final cumulative variable n_r = m_1 + ... + m_r is <= N; nested
// sums (mzv_index) keep n_1 <= N.  Under the level-1 argument reversal these
// are the same constraint, and each rewrite pass only regroups terms indexed
// by the same tuples, so a reduction and its input agree exactly at every
// cutoff.  That exact agreement is the verification oracle: it exercises
// every coefficient with no floating-point tolerance involved.
// ---------------------------------------------------------------------------

// Sum over N >= n_1 > n_2 > ... > n_r >= 1 of prod n_j^{-s_j}, exactly.
// Zero when fewer than r values fit below the cutoff.  Computed by a prefix
// sum recurrence in O(depth * N) rational operations rather than enumerating
// the (N choose r) chains.
inline rational truncated_mzv(const mzv_index& z, long cutoff) {
  if (cutoff < 1) throw std::invalid_argument("truncated_mzv: cutoff must be >= 1");
  const std::vector<int>& s = z.args();
  const int r = z.depth();
  if (cutoff < r) return rational(0);
  // prev[n] = sum over n >= n_k > ... > n_r >= 1 of the suffix product,
  // built from the deepest argument outward; the empty suffix is 1.
  std::vector<rational> prev(cutoff + 1, rational(1));
  std::vector<rational> cur(cutoff + 1);
  for (int k = r; k >= 1; --k) {
    cur[0] = 0;
    for (long n = 1; n <= cutoff; ++n) {
      cur[n] = cur[n - 1] + reciprocal_power(n, s[k - 1]) * prev[n - 1];
    }
    std::swap(prev, cur);
  }
  return prev[cutoff];
}

// Sum over all positive (m_1,...,m_r) with m_1 + ... + m_r <= N of
// prod m_k^{-s_k} * (m_1+...+m_r)^{-s}, exactly, by enumerating the
// compositions of each total.  Cost grows like C(N-1, r-1); callers keep
// N modest (the verification oracle uses N <= 50).
inline rational truncated_mt(const mt_index& t, long cutoff) {
  if (cutoff < 1) throw std::invalid_argument("truncated_mt: cutoff must be >= 1");
  const std::vector<int>& s = t.args();
  const int r = t.depth();
  if (cutoff < r) return rational(0);
  rational total(0);
  auto descend = [&](auto&& self, int pos, long used, const integer& partial) -> void {
    if (pos == r - 1) {
      for (long m = 1; used + m <= cutoff; ++m) {
        integer denom = partial * int_pow(m, s[pos]) * int_pow(used + m, t.last());
        total += rational(integer(1), denom);
      }
      return;
    }
    // Leave room for the remaining variables, each at least 1.
    for (long m = 1; used + m + (r - 1 - pos) <= cutoff; ++m) {
      self(self, pos + 1, used + m, partial * int_pow(m, s[pos]));
    }
  };
  descend(descend, 0, 0, integer(1));
  return total;
}

// Exact truncation of a level-l sum: positions below the level are free
// variables m_k (contributing m_k^{-s_k}, with n their running total) and
// positions at or above it are strictly increasing cumulative variables n_k
// (contributing n_k^{-s_k}), the last of which is capped by N.
inline rational truncated_tl(const tl_index& t, long cutoff) {
  if (cutoff < 1) throw std::invalid_argument("truncated_tl: cutoff must be >= 1");
  const std::vector<int>& s = t.args();
  const int r = t.depth();
  const int level = t.level();
  if (cutoff < r) return rational(0);
  rational total(0);
  auto descend = [&](auto&& self, int pos, long previous, const integer& partial) -> void {
    if (pos == r) {
      total += rational(integer(1), partial);
      return;
    }
    const long slack = r - 1 - pos;  // later variables each add at least 1
    if (pos < level) {
      for (long m = 1; previous + m + slack <= cutoff; ++m) {
        self(self, pos + 1, previous + m, partial * int_pow(m, s[pos]));
      }
    } else {
      for (long n = previous + 1; n + slack <= cutoff; ++n) {
        self(self, pos + 1, n, partial * int_pow(n, s[pos]));
      }
    }
  };
  descend(descend, 0, 0, integer(1));
  return total;
}

// Coefficient-weighted truncations, exact.
inline rational truncated_combination(const mzv_combination& c, long cutoff) {
  rational total(0);
  for (const auto& [key, coeff] : c) total += coeff * truncated_mzv(key, cutoff);
  return total;
}

inline rational truncated_combination(const tl_combination& c, long cutoff) {
  rational total(0);
  for (const auto& [key, coeff] : c) total += coeff * truncated_tl(key, cutoff);
  return total;
}

// Outcome of checking a reduction against exact truncation at several
// cutoffs.  A false verdict signals an implementation bug, never a data
// problem: the identity holds termwise for every cutoff.
struct verification_report {
  mt_index input;
  mzv_combination reduced;
  std::vector<long> cutoffs;
  std::vector<rational> lhs;  // truncated input, per cutoff
  std::vector<rational> rhs;  // truncated reduction, per cutoff
  bool verified = false;
};

inline verification_report verify_reduction(const mt_index& t,
                                            const std::vector<long>& cutoffs) {
  if (cutoffs.empty()) {
    throw std::invalid_argument("verify_reduction: need at least one cutoff");
  }
  verification_report report{t, reduce(t), cutoffs, {}, {}, true};
  for (long n : cutoffs) {
    report.lhs.push_back(truncated_mt(t, n));
    report.rhs.push_back(truncated_combination(report.reduced, n));
    if (report.lhs.back() != report.rhs.back()) report.verified = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Floating-point evaluation with a certified error bound.
//
// A nested sum splits at a cutoff N by the position of the last variable
// exceeding N:
//
//   Z = S(N) + sum_{k=1}^{r} W_k(N) * Z^{(k+1)}(N)
//
// where S(N) is the truncated sum, Z^{(k)}(N) the truncated sum of the
// argument suffix (s_k,...,s_r) (with Z^{(r+1)} = 1), and
//
//   W_1(x) = sum_{n > x} n^{-s_1},   W_k(x) = sum_{m > x} m^{-s_k} W_{k-1}(m).
//
// The identity is exact.  Each W_k is represented as a short power series in
// 1/x with an explicit remainder bound, built from the Euler-Maclaurin
// expansion of single-zeta tails; the remainder of that expansion is bounded
// in magnitude by the first omitted term because the summand t^{-s} is
// completely monotone.  Everything else is a finite computation whose
// rounding is modelled conservatively, so the returned error bound is a
// genuine enclosure, not an estimate.
// ---------------------------------------------------------------------------

struct float_eval {
  double value = 0.0;
  double error_bound = 0.0;
  long cutoff = 0;
};

// Tolerances below this are rejected: the rounding model of the evaluator
// cannot certify them for every admissible index.
inline constexpr double eval_eps_floor = 1e-10;

// Raised when a requested tolerance cannot be certified; carries the bound
// that was achievable instead.
class precision_error : public std::runtime_error {
 public:
  precision_error(const std::string& message, double achievable)
      : std::runtime_error(message), achievable_(achievable) {}
  double achievable_bound() const noexcept { return achievable_; }

 private:
  double achievable_;
};

namespace detail {

// B_2, B_4, ..., B_14 and the matching (2i)!.  Six series terms are ever
// used; the seventh entry only bounds the remainder.
inline constexpr double k_bernoulli[7] = {1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0,
                                          -1.0 / 30.0, 5.0 / 66.0,      -691.0 / 2730.0,
                                          7.0 / 6.0};
inline constexpr double k_even_factorial[7] = {2.0,       24.0,          720.0,
                                               40320.0,   3628800.0,     479001600.0,
                                               87178291200.0};

inline double rising_factorial(double s, int count) {
  double product = 1.0;
  for (int i = 0; i < count; ++i) product *= s + i;
  return product;
}

// A finite series sum_e coeff[e] * x^{-e} together with a certified bound
// rem_coeff * x^{-rem_exp} on everything it omits, valid for every x >= the
// reference point it was built at.
struct power_tail {
  std::map<int, double> coeff;
  double rem_coeff = 0.0;
  int rem_exp = std::numeric_limits<int>::max() / 2;

  // Merge |c| * x^{-e} into the remainder.  Both bounds are moved to the
  // smaller exponent, paying a factor xref^{-difference} which only shrinks
  // them; the small inflation covers the double arithmetic of this merge.
  void fold_remainder(double c, int e, double xref) {
    if (c == 0.0) return;
    if (rem_coeff == 0.0) {
      rem_coeff = c;
      rem_exp = e;
      return;
    }
    const int keep = std::min(e, rem_exp);
    rem_coeff = rem_coeff * std::pow(xref, -static_cast<double>(rem_exp - keep)) +
                c * std::pow(xref, -static_cast<double>(e - keep));
    rem_coeff *= 1.000001;
    rem_exp = keep;
  }
};

// Euler-Maclaurin series for the single tail sum_{m > x} m^{-s}, s >= 2:
//
//   x^{1-s}/(s-1) - x^{-s}/2 + sum_i B_{2i}/(2i)! (s)_{2i-1} x^{-s-2i+1}
//
// truncated once the exponent passes `cap`, with the first omitted term
// bounding the remainder.
inline power_tail zeta_tail_series(int s, int cap, double xref) {
  if (s < 2) throw std::logic_error("zeta_tail_series: exponent must be >= 2");
  power_tail tail;
  auto put = [&](int e, double c) {
    if (e <= cap) {
      tail.coeff[e] += c;
    } else {
      tail.fold_remainder(std::fabs(c), e, xref);
    }
  };
  put(s - 1, 1.0 / (s - 1));
  put(s, -0.5);
  for (int i = 1; i <= 6; ++i) {
    const int e = s + 2 * i - 1;
    const double c =
        k_bernoulli[i - 1] / k_even_factorial[i - 1] * rising_factorial(s, 2 * i - 1);
    if (e > cap) {
      // Omitted terms are controlled by the first of them.
      tail.fold_remainder(std::fabs(c), e, xref);
      return tail;
    }
    tail.coeff[e] += c;
  }
  tail.fold_remainder(
      std::fabs(k_bernoulli[6] / k_even_factorial[6] * rising_factorial(s, 13)), s + 13,
      xref);
  return tail;
}

// W_k from W_{k-1}: sum_{m > x} m^{-s} W_{k-1}(m).  Series terms map through
// single tails of shifted exponent; the inner remainder is integrated via
// sum_{m > x} m^{-a} <= x^{1-a}/(a-1).
inline power_tail compose_tail(const power_tail& inner, int s, int cap, double xref) {
  power_tail out;
  for (const auto& [e, c] : inner.coeff) {
    power_tail single = zeta_tail_series(s + e, cap, xref);
    for (const auto& [e2, c2] : single.coeff) out.coeff[e2] += c * c2;
    if (single.rem_coeff > 0.0) {
      out.fold_remainder(std::fabs(c) * single.rem_coeff, single.rem_exp, xref);
    }
  }
  if (inner.rem_coeff > 0.0) {
    const int a = s + inner.rem_exp;
    out.fold_remainder(inner.rem_coeff / (a - 1), a - 1, xref);
  }
  return out;
}

struct enclosure {
  double value = 0.0;
  double halfwidth = 0.0;
};

// Evaluate the series at x; the halfwidth combines the certified remainder
// with a conservative allowance for the floating arithmetic of this very
// evaluation.
inline enclosure evaluate_tail(const power_tail& tail, double x) {
  long double value = 0.0L;
  long double magnitude = 0.0L;
  for (const auto& [e, c] : tail.coeff) {
    const long double term =
        static_cast<long double>(c) *
        std::pow(static_cast<long double>(x), -static_cast<long double>(e));
    value += term;
    magnitude += std::fabs(term);
  }
  long double half = magnitude * static_cast<long double>(tail.coeff.size() + 5) * 3e-16L;
  if (tail.rem_coeff > 0.0) {
    half += static_cast<long double>(tail.rem_coeff) *
            std::pow(static_cast<long double>(x), -static_cast<long double>(tail.rem_exp));
  }
  return {static_cast<double>(value), static_cast<double>(half * 1.000001L)};
}

// (1/n)^s by binary powering in long double.
inline long double power_neg(long n, int s) {
  long double result = 1.0L;
  long double square = 1.0L / static_cast<long double>(n);
  int e = s;
  while (e > 0) {
    if (e & 1) result *= square;
    square *= square;
    e >>= 1;
  }
  return result;
}

// Compensated accumulator; keeps the summation error of N positive terms at
// a few units of long double epsilon instead of N of them.
struct kahan_sum {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double x) {
    const long double y = x - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  long double value() const { return sum + comp; }
};

// P[k] = truncated value of the argument suffix (s_k,...,s_r) at the cutoff,
// for k = 1..r+1 (P[r+1] = 1), all in one pass.  Updating k ascending uses
// the k+1 accumulator before its own update, i.e. its previous-n value, which
// is exactly the recurrence P_k(n) = P_k(n-1) + n^{-s_k} P_{k+1}(n-1).
inline std::vector<long double> suffix_partial_sums(const std::vector<int>& args,
                                                    long cutoff) {
  const int r = static_cast<int>(args.size());
  std::vector<kahan_sum> acc(r + 2);
  acc[r + 1].sum = 1.0L;
  for (long n = 1; n <= cutoff; ++n) {
    for (int k = 1; k <= r; ++k) {
      acc[k].add(power_neg(n, args[k - 1]) * acc[k + 1].sum);
    }
  }
  std::vector<long double> out(r + 2, 0.0L);
  for (int k = 1; k <= r + 1; ++k) out[k] = acc[k].value();
  return out;
}

struct eval_attempt {
  double value = 0.0;
  double bound = 0.0;
};

// One evaluation at a fixed cutoff: exact-split tail identity on top of the
// compensated partial sums, plus a rounding model.  The model charges each
// accumulator a few epsilons of its own magnitude (Kahan makes that valid
// independently of the term count) and propagates lower-level errors through
// the weights sum_m m^{-s}, bounded by 1.7 for s >= 2 and 1 + log N for
// s = 1.
inline eval_attempt eval_mzv_at(const mzv_index& z, long cutoff) {
  const std::vector<int>& s = z.args();
  const int r = z.depth();
  const long double eps_l = std::numeric_limits<long double>::epsilon();

  const std::vector<long double> sums = suffix_partial_sums(s, cutoff);

  std::vector<long double> delta(r + 2, 0.0L);
  for (int k = r; k >= 1; --k) {
    const long double weight =
        (s[k - 1] >= 2) ? 1.7L
                        : 1.0L + std::log(static_cast<long double>(cutoff));
    delta[k] = (14.0L + 5.0L * static_cast<long double>(cutoff) * eps_l) * eps_l *
                   sums[k] +
               weight * delta[k + 1];
  }

  const int cap = z.weight() + 16;
  const double xref = static_cast<double>(cutoff);
  power_tail w;
  long double tail_value = 0.0L;
  long double err = delta[1];
  for (int k = 1; k <= r; ++k) {
    w = (k == 1) ? zeta_tail_series(s[0], cap, xref)
                 : compose_tail(w, s[k - 1], cap, xref);
    const enclosure enc = evaluate_tail(w, xref);
    const long double factor = sums[k + 1];
    tail_value += static_cast<long double>(enc.value) * factor;
    err += factor * static_cast<long double>(enc.halfwidth) +
           std::fabs(static_cast<long double>(enc.value)) * delta[k + 1] +
           std::fabs(static_cast<long double>(enc.value)) * factor * 4.0L * eps_l;
  }
  const long double value = sums[1] + tail_value;
  err += std::fabs(value) * 1.3e-16L + 1e-300L;
  return {static_cast<double>(value), static_cast<double>(err * 1.000001L)};
}

inline const std::vector<long>& eval_cutoff_ladder() {
  static const std::vector<long> ladder{256, 1024, 4096, 16384, 65536, 262144};
  return ladder;
}

}  // namespace detail

// Approximates an admissible nested sum with a certified absolute error
// bound <= eps, growing the cutoff until the bound fits.  Tolerances below
// eval_eps_floor are rejected with a precision_error carrying the bound the
// evaluator could certify.
inline float_eval eval_mzv(const mzv_index& z, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eval_mzv: eps must be positive");
  if (!z.admissible()) {
    throw std::invalid_argument(
        "eval_mzv: series diverges (leading argument must be >= 2)");
  }
  double best_bound = std::numeric_limits<double>::infinity();
  for (long cutoff : detail::eval_cutoff_ladder()) {
    const detail::eval_attempt attempt = detail::eval_mzv_at(z, cutoff);
    best_bound = std::min(best_bound, attempt.bound);
    if (eps >= eval_eps_floor && attempt.bound <= eps) {
      return {attempt.value, attempt.bound, cutoff};
    }
  }
  std::ostringstream message;
  if (eps < eval_eps_floor) {
    message << "eval_mzv: tolerance " << eps << " is below the supported floor "
            << eval_eps_floor << "; achievable bound " << best_bound;
  } else {
    message << "eval_mzv: could not certify tolerance " << eps
            << "; achievable bound " << best_bound;
  }
  throw precision_error(message.str(), best_bound);
}

// Coefficient-weighted evaluation.  The tolerance is split across keys by
// total coefficient mass; per-key tolerances are clamped at the floor and
// the recombined bound is checked honestly at the end.
inline float_eval eval_combination(const mzv_combination& c, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("eval_combination: eps must be positive");
  }
  if (c.empty()) return {0.0, 0.0, 0};
  double mass = 0.0;
  for (const auto& [key, coeff] : c) {
    mass += std::fabs(coeff.convert_to<double>());
  }
  const double per_key = std::max(eps / (2.0 * mass), eval_eps_floor);
  long double value = 0.0L;
  long double magnitude = 0.0L;
  long double bound = 0.0L;
  long cutoff = 0;
  for (const auto& [key, coeff] : c) {
    const double weight = coeff.convert_to<double>();
    const float_eval part = eval_mzv(key, per_key);
    value += static_cast<long double>(weight) * part.value;
    magnitude += std::fabs(static_cast<long double>(weight) * part.value);
    bound += std::fabs(weight) * part.error_bound;
    cutoff = std::max(cutoff, part.cutoff);
  }
  bound += magnitude * static_cast<long double>(c.size() + 8) * 3e-16L +
           std::fabs(value) * 1.3e-16L;
  const double total_bound = static_cast<double>(bound * 1.000001L);
  if (total_bound > eps) {
    std::ostringstream message;
    message << "eval_combination: could not certify tolerance " << eps
            << "; achievable bound " << total_bound;
    throw precision_error(message.str(), total_bound);
  }
  return {static_cast<double>(value), total_bound, cutoff};
}

// Mordell-Tornheim values evaluate through their exact reduction; the
// combination's certified bound carries over unchanged.
inline float_eval eval_mt(const mt_index& t, double eps) {
  return eval_combination(reduce(t), eps);
}

}  // namespace mtzeta
