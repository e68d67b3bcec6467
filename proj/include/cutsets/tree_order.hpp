#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutsets/chain.hpp"
#include "cutsets/errors.hpp"
#include "cutsets/mask.hpp"

namespace cutsets {

/// A finite digit sequence over {0,...,k-1}; partial functions are the
/// sequences shorter than the universe depth, leaves have full depth.
struct tree_order_element {
  std::vector<int> digits;

  std::size_t length() const { return digits.size(); }

  friend bool operator==(const tree_order_element&, const tree_order_element&) = default;
};

inline std::string to_string(const tree_order_element& e) {
  if (e.digits.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(e.digits[i]);
  }
  return out;
}

namespace detail {

inline void check_digits(const tree_order_element& e, int alphabet, const char* where) {
  for (int d : e.digits) {
    if (d < 0 || d >= alphabet) {
      throw usage_error(std::string(where) + ": digit " + std::to_string(d) +
                        " outside alphabet {0,...," + std::to_string(alphabet - 1) + "}");
    }
  }
}

// Total order, digits already validated: a proper extension is larger,
// otherwise the first differing digit decides.
inline std::strong_ordering tree_less(const tree_order_element& f, const tree_order_element& g) {
  const std::size_t m = std::min(f.digits.size(), g.digits.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (f.digits[i] != g.digits[i]) return f.digits[i] <=> g.digits[i];
  }
  return f.digits.size() <=> g.digits.size();
}

}  // namespace detail

/// Compares two digit sequences in the tree order. Total: exactly one of
/// less/equal/greater holds for every pair, equal only when identical.
inline std::strong_ordering tree_order_compare(const tree_order_element& f,
                                               const tree_order_element& g, int alphabet) {
  if (alphabet < 1) {
    throw usage_error("tree_order_compare: alphabet size must be >= 1, got " +
                      std::to_string(alphabet));
  }
  detail::check_digits(f, alphabet, "tree_order_compare");
  detail::check_digits(g, alphabet, "tree_order_compare");
  return detail::tree_less(f, g);
}

/// All digit sequences of length < depth (the partial functions D, which
/// get re-indexed as a ground set) together with the k^depth leaves, both
/// kept in ascending tree order.
class tree_order_universe {
 public:
  tree_order_universe(int alphabet, int depth) : alphabet_(alphabet), depth_(depth) {
    if (alphabet_ < 1 || alphabet_ > max_ground) {
      throw usage_error("tree_order_universe: alphabet size " + std::to_string(alphabet_) +
                        " outside [1, " + std::to_string(max_ground) + "]");
    }
    if (depth_ < 0) {
      throw usage_error("tree_order_universe: depth must be >= 0, got " + std::to_string(depth_));
    }
    std::uint64_t partial_count = 0;
    std::uint64_t level = 1;
    for (int len = 0; len < depth_; ++len) {
      partial_count += level;
      if (partial_count > max_ground) {
        throw capacity_error("tree_order_universe: partial-function count exceeds limit " +
                             std::to_string(max_ground) + " (alphabet " +
                             std::to_string(alphabet_) + ", depth " + std::to_string(depth_) + ")");
      }
      level *= static_cast<std::uint64_t>(alphabet_);
    }
    for (int len = 0; len < depth_; ++len) append_level(len, partials_);
    append_level(depth_, leaves_);
    auto by_order = [](const tree_order_element& a, const tree_order_element& b) {
      return detail::tree_less(a, b) < 0;
    };
    std::sort(partials_.begin(), partials_.end(), by_order);
    std::sort(leaves_.begin(), leaves_.end(), by_order);
  }

  int alphabet() const { return alphabet_; }
  int depth() const { return depth_; }
  const std::vector<tree_order_element>& partials() const { return partials_; }
  const std::vector<tree_order_element>& leaves() const { return leaves_; }

  bool is_leaf(const tree_order_element& e) const {
    if (static_cast<int>(e.length()) != depth_) return false;
    for (int d : e.digits) {
      if (d < 0 || d >= alphabet_) return false;
    }
    return true;
  }

 private:
  void append_level(int len, std::vector<tree_order_element>& out) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    for (;;) {
      out.push_back(tree_order_element{digits});
      int i = len - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == alphabet_ - 1) {
        digits[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++digits[static_cast<std::size_t>(i)];
    }
  }

  int alphabet_ = 1;
  int depth_ = 0;
  std::vector<tree_order_element> partials_;
  std::vector<tree_order_element> leaves_;
};

/// For each leaf f, the set C_f = {d ∈ D : d < f} of partial functions
/// below it, as a subset of D re-indexed by its sorted order. Consecutive
/// equal sets (sibling leaves collapse finitely) are deduplicated; the
/// distinct count is k^(depth-1).
inline chain tree_chain_family(const tree_order_universe& u) {
  if (u.alphabet() < 2) {
    throw usage_error("tree_chain_family: alphabet size must be >= 2, got " +
                      std::to_string(u.alphabet()));
  }
  if (u.depth() < 1) {
    throw usage_error("tree_chain_family: depth must be >= 1, got " + std::to_string(u.depth()));
  }
  const auto& d = u.partials();
  std::vector<std::uint64_t> sets;
  sets.reserve(u.leaves().size());
  for (const auto& leaf : u.leaves()) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (detail::tree_less(d[i], leaf) < 0) bits |= std::uint64_t{1} << i;
    }
    if (sets.empty() || sets.back() != bits) sets.push_back(bits);
  }
  return chain(static_cast<int>(d.size()), std::move(sets));
}

inline chain tree_chain_family(int alphabet, int depth) {
  return tree_chain_family(tree_order_universe(alphabet, depth));
}

/// |{d ∈ D : f1 < d < f2}| by direct scan of the partial functions. Both
/// arguments must be leaves with f1 < f2.
inline int separator_count(const tree_order_element& f1, const tree_order_element& f2,
                           const tree_order_universe& u) {
  if (!u.is_leaf(f1) || !u.is_leaf(f2)) {
    throw usage_error("separator_count: arguments must be leaves of depth " +
                      std::to_string(u.depth()));
  }
  if (detail::tree_less(f1, f2) >= 0) {
    throw usage_error("separator_count: needs " + to_string(f1) + " < " + to_string(f2));
  }
  int count = 0;
  for (const auto& d : u.partials()) {
    if (detail::tree_less(f1, d) < 0 && detail::tree_less(d, f2) < 0) ++count;
  }
  return count;
}

}  // namespace cutsets
