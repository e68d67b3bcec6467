#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutsets/errors.hpp"
#include "cutsets/mask.hpp"

namespace cutsets {

/// A chain in P(n): sets strictly increasing under inclusion.
///
/// Since A ⊊ B implies a smaller bit-pattern value, inclusion order and
/// value order agree; the constructor sorts by value and then verifies
/// that each set is a proper subset of the next.
class chain {
 public:
  chain() = default;

  chain(int ground, std::vector<std::uint64_t> sets) : ground_(ground), sets_(std::move(sets)) {
    detail::check_ground(ground_, "chain");
    const std::uint64_t full = full_bits(ground_);
    for (std::uint64_t s : sets_) {
      if ((s & ~full) != 0) {
        throw usage_error("chain: set " + set_braces(s) + " exceeds ground of size " +
                          std::to_string(ground_));
      }
    }
    std::sort(sets_.begin(), sets_.end());
    for (std::size_t i = 1; i < sets_.size(); ++i) {
      if ((sets_[i - 1] & sets_[i]) != sets_[i - 1] || sets_[i - 1] == sets_[i]) {
        throw usage_error("chain: " + set_braces(sets_[i - 1]) + " and " + set_braces(sets_[i]) +
                          " are not strictly nested");
      }
    }
  }

  int ground() const { return ground_; }
  std::size_t size() const { return sets_.size(); }
  bool is_empty() const { return sets_.empty(); }
  const std::vector<std::uint64_t>& sets() const { return sets_; }
  subset_mask set_at(std::size_t i) const { return subset_mask(sets_.at(i), ground_); }

  friend bool operator==(const chain&, const chain&) = default;

 private:
  int ground_ = 0;
  std::vector<std::uint64_t> sets_;
};

/// A maximal chain of P(n), stored as the permutation of ground elements
/// whose prefix sets give the saturated chain ∅ ⊂ {p0} ⊂ {p0,p1} ⊂ … ⊂ X.
class maximal_chain {
 public:
  maximal_chain() = default;

  maximal_chain(int ground, std::vector<int> perm) : ground_(ground), perm_(std::move(perm)) {
    detail::check_ground(ground_, "maximal_chain");
    if (static_cast<int>(perm_.size()) != ground_) {
      throw usage_error("maximal_chain: permutation length " + std::to_string(perm_.size()) +
                        " does not match ground size " + std::to_string(ground_));
    }
    std::uint64_t seen = 0;
    for (int e : perm_) {
      detail::check_element(e, ground_, "maximal_chain");
      if (seen >> e & 1u) {
        throw usage_error("maximal_chain: element " + std::to_string(e) + " repeated");
      }
      seen |= std::uint64_t{1} << e;
    }
  }

  int ground() const { return ground_; }
  const std::vector<int>& perm() const { return perm_; }

  /// The set of the first `count` permutation elements, 0 ≤ count ≤ n.
  std::uint64_t prefix_bits(int count) const {
    std::uint64_t bits = 0;
    for (int i = 0; i < count; ++i) bits |= std::uint64_t{1} << perm_[static_cast<std::size_t>(i)];
    return bits;
  }

  /// The induced saturated chain as n+1 masks from ∅ to X.
  std::vector<std::uint64_t> set_sequence() const {
    std::vector<std::uint64_t> seq;
    seq.reserve(perm_.size() + 1);
    std::uint64_t bits = 0;
    seq.push_back(bits);
    for (int e : perm_) {
      bits |= std::uint64_t{1} << e;
      seq.push_back(bits);
    }
    return seq;
  }

  chain to_chain() const { return chain(ground_, set_sequence()); }

  friend bool operator==(const maximal_chain&, const maximal_chain&) = default;

 private:
  int ground_ = 0;
  std::vector<int> perm_;
};

/// Full enumeration walks all n! permutations; keep it off the table
/// beyond 3.6M chains.
inline constexpr int max_enumeration_ground = 10;

/// Yields every maximal chain of P(n) exactly once, in lexicographic
/// permutation order. Single-consumer stream.
class maximal_chain_enumerator {
 public:
  explicit maximal_chain_enumerator(int ground) : ground_(ground) {
    detail::check_ground(ground_, "enumerate_maximal_chains");
    if (ground_ > max_enumeration_ground) {
      throw capacity_error("enumerate_maximal_chains: ground size " + std::to_string(ground_) +
                           " exceeds limit " + std::to_string(max_enumeration_ground) +
                           " (would enumerate n! chains)");
    }
    perm_.resize(static_cast<std::size_t>(ground_));
    std::iota(perm_.begin(), perm_.end(), 0);
  }

  std::optional<maximal_chain> next() {
    if (done_) return std::nullopt;
    if (first_) {
      first_ = false;
      return maximal_chain(ground_, perm_);
    }
    if (!std::next_permutation(perm_.begin(), perm_.end())) {
      done_ = true;
      return std::nullopt;
    }
    return maximal_chain(ground_, perm_);
  }

 private:
  int ground_ = 0;
  std::vector<int> perm_;
  bool first_ = true;
  bool done_ = false;
};

template <typename F>
void for_each_maximal_chain(int ground, F&& fn) {
  maximal_chain_enumerator en(ground);
  while (auto mc = en.next()) {
    fn(*mc);
  }
}

/// Extends a chain to a maximal chain containing it. Deterministic rule:
/// between consecutive gap endpoints the missing elements are inserted in
/// ascending element order, so applying this to a maximal chain's own set
/// sequence is the identity.
inline maximal_chain complete_to_maximal_chain(const chain& c) {
  const int n = c.ground();
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  std::uint64_t prev = 0;
  auto emit_gap = [&](std::uint64_t target) {
    for (std::uint64_t add = target & ~prev; add != 0; add &= add - 1) {
      perm.push_back(std::countr_zero(add));
    }
    prev = target;
  };
  for (std::uint64_t s : c.sets()) emit_gap(s);
  emit_gap(full_bits(n));
  return maximal_chain(n, std::move(perm));
}

}  // namespace cutsets
