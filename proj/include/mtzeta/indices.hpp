#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtzeta {

namespace detail {

inline void require_positive_args(const std::vector<int>& args, const char* who) {
  if (args.empty()) {
    throw std::invalid_argument(std::string(who) + ": argument list is empty");
  }
  for (int a : args) {
    if (a < 1) {
      throw std::invalid_argument(std::string(who) +
                                  ": arguments must be positive integers");
    }
  }
}

}  // namespace detail

// Argument tuple (s_1,...,s_r; s) of a Mordell-Tornheim value
//
//   T(s_1,...,s_r; s) = sum over m_1,...,m_r >= 1 of
//                       1 / (m_1^{s_1} ... m_r^{s_r} (m_1+...+m_r)^s).
//
// All exponents are positive integers, which is enough for convergence.
class mt_index {
 public:
  mt_index(std::vector<int> args, int last) : args_(std::move(args)), last_(last) {
    detail::require_positive_args(args_, "mt_index");
    if (last_ < 1) {
      throw std::invalid_argument("mt_index: trailing exponent must be positive");
    }
  }

  const std::vector<int>& args() const noexcept { return args_; }
  int last() const noexcept { return last_; }
  int depth() const noexcept { return static_cast<int>(args_.size()); }
  int weight() const noexcept {
    return std::accumulate(args_.begin(), args_.end(), last_);
  }

  friend auto operator<=>(const mt_index&, const mt_index&) = default;

 private:
  std::vector<int> args_;
  int last_;
};

// Argument tuple (s_1,...,s_r) of a multiple zeta value
//
//   Z(s_1,...,s_r) = sum over n_1 > n_2 > ... > n_r >= 1 of
//                    1 / (n_1^{s_1} ... n_r^{s_r}),
//
// i.e. the first argument sits on the largest summation variable.  The series
// converges exactly when s_1 >= 2 ("admissible"); the index itself only
// requires positive integers so that divergent tuples can still be named.
class mzv_index {
 public:
  explicit mzv_index(std::vector<int> args) : args_(std::move(args)) {
    detail::require_positive_args(args_, "mzv_index");
  }

  const std::vector<int>& args() const noexcept { return args_; }
  int depth() const noexcept { return static_cast<int>(args_.size()); }
  int weight() const noexcept {
    return std::accumulate(args_.begin(), args_.end(), 0);
  }
  bool admissible() const noexcept { return args_.front() >= 2; }

  friend auto operator<=>(const mzv_index&, const mzv_index&) = default;

 private:
  std::vector<int> args_;
};

// Intermediate family interpolating between the two shapes above.  A level-l
// index (s_1,...,s_r | l) with 1 <= l <= r-1 denotes
//
//   sum over m_1,...,m_l >= 1 and n_{l+1} > n_l of
//     1 / (m_1^{s_1} ... m_l^{s_l} n_{l+1}^{s_{l+1}} ... n_r^{s_r})
//
// where n_k = m_1 + ... + m_k for k <= l and the remaining n_k increase
// strictly.  Equivalently: the first l variables are free, the rest are
// cumulative.  Level r-1 is one partial-fraction pass away from an mt_index;
// level 1 is a multiple zeta value with its arguments reversed.
class tl_index {
 public:
  tl_index(std::vector<int> args, int level)
      : args_(std::move(args)), level_(level) {
    detail::require_positive_args(args_, "tl_index");
    if (args_.size() < 2) {
      throw std::invalid_argument("tl_index: depth must be at least 2");
    }
    if (level_ < 1 || level_ > static_cast<int>(args_.size()) - 1) {
      throw std::invalid_argument("tl_index: level must lie in [1, depth-1]");
    }
  }

  const std::vector<int>& args() const noexcept { return args_; }
  int level() const noexcept { return level_; }
  int depth() const noexcept { return static_cast<int>(args_.size()); }
  int weight() const noexcept {
    return std::accumulate(args_.begin(), args_.end(), 0);
  }

  friend auto operator<=>(const tl_index&, const tl_index&) = default;

 private:
  std::vector<int> args_;
  int level_;
};

}  // namespace mtzeta
