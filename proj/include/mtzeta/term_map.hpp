#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>

#include "mtzeta/indices.hpp"
#include "mtzeta/rational.hpp"

namespace mtzeta {

// A finite linear combination of index keys with exact rational coefficients.
// Zero coefficients are never stored, so equality of term_maps is equality of
// the combinations they denote and iteration order is the key order.
template <typename Key>
class term_map {
 public:
  using const_iterator = typename std::map<Key, rational>::const_iterator;

  term_map() = default;

  term_map(std::initializer_list<std::pair<Key, rational>> init) {
    for (const auto& [key, coeff] : init) add(key, coeff);
  }

  // Adds coeff * key, merging with any existing term and dropping the entry if
  // the merged coefficient cancels to zero.
  void add(const Key& key, const rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Adds factor * other termwise.
  void add_scaled(const term_map& other, const rational& factor) {
    if (factor == 0) return;
    for (const auto& [key, coeff] : other) add(key, coeff * factor);
  }

  // Coefficient of key, zero when absent.
  rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? rational(0) : it->second;
  }

  bool contains(const Key& key) const { return terms_.contains(key); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }

  // The shared weight of all keys, or nullopt if the combination is empty or
  // mixes weights.  Rewrites in this library are weight-homogeneous, so a
  // nullopt from a reduction output signals a bug.
  std::optional<int> common_weight() const {
    return common_value([](const Key& k) { return k.weight(); });
  }

  // Same for the shared depth of all keys.
  std::optional<int> common_depth() const {
    return common_value([](const Key& k) { return k.depth(); });
  }

  friend bool operator==(const term_map&, const term_map&) = default;

 private:
  template <typename Fn>
  std::optional<int> common_value(Fn&& property) const {
    std::optional<int> shared;
    for (const auto& [key, coeff] : terms_) {
      int value = property(key);
      if (!shared) {
        shared = value;
      } else if (*shared != value) {
        return std::nullopt;
      }
    }
    return shared;
  }

  std::map<Key, rational> terms_;
};

using mzv_combination = term_map<mzv_index>;
using tl_combination = term_map<tl_index>;

}  // namespace mtzeta
