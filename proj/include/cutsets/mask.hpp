#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cutsets/errors.hpp"

namespace cutsets {

/// Widest representable ground set: one element per bit of a 64-bit word,
/// keeping the top bit free so sizes and counts stay in signed range.
inline constexpr int max_ground = 63;

namespace detail {

inline void check_ground(int n, const char* where) {
  if (n < 0 || n > max_ground) {
    throw usage_error(std::string(where) + ": ground size " + std::to_string(n) +
                      " outside [0, " + std::to_string(max_ground) + "]");
  }
}

inline void check_element(int e, int n, const char* where) {
  if (e < 0 || e >= n) {
    throw usage_error(std::string(where) + ": element " + std::to_string(e) +
                      " outside ground {0,...," + std::to_string(n - 1) + "}");
  }
}

}  // namespace detail

/// Bit pattern of the full ground set {0,...,n-1}.
inline std::uint64_t full_bits(int n) {
  detail::check_ground(n, "full_bits");
  return n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n);
}

/// A subset of {0,...,n-1} packed into a machine word, tagged with its
/// ground size so cross-ground mixups are caught instead of computed.
struct subset_mask {
  std::uint64_t bits = 0;
  int ground = 0;

  subset_mask() = default;

  subset_mask(std::uint64_t bits_, int ground_) : bits(bits_), ground(ground_) {
    detail::check_ground(ground_, "subset_mask");
    if ((bits_ & ~full_bits(ground_)) != 0) {
      throw usage_error("subset_mask: bits set outside ground of size " +
                        std::to_string(ground_));
    }
  }

  int size() const { return std::popcount(bits); }
  bool is_empty() const { return bits == 0; }
  bool is_full() const { return bits == full_bits(ground); }
  bool contains(int e) const { return e >= 0 && e < ground && (bits >> e & 1u); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend bool operator==(const subset_mask&, const subset_mask&) = default;
};

inline subset_mask empty_set(int n) { return subset_mask(0, n); }
inline subset_mask full_set(int n) { return subset_mask(full_bits(n), n); }

inline subset_mask make_set(int n, const std::vector<int>& elements) {
  detail::check_ground(n, "make_set");
  std::uint64_t bits = 0;
  for (int e : elements) {
    detail::check_element(e, n, "make_set");
    bits |= std::uint64_t{1} << e;
  }
  return subset_mask(bits, n);
}

namespace detail {

inline void check_same_ground(const subset_mask& a, const subset_mask& b, const char* where) {
  if (a.ground != b.ground) {
    throw usage_error(std::string(where) + ": mismatched grounds " +
                      std::to_string(a.ground) + " and " + std::to_string(b.ground));
  }
}

}  // namespace detail

inline subset_mask operator|(const subset_mask& a, const subset_mask& b) {
  detail::check_same_ground(a, b, "operator|");
  return subset_mask(a.bits | b.bits, a.ground);
}

inline subset_mask operator&(const subset_mask& a, const subset_mask& b) {
  detail::check_same_ground(a, b, "operator&");
  return subset_mask(a.bits & b.bits, a.ground);
}

inline subset_mask operator-(const subset_mask& a, const subset_mask& b) {
  detail::check_same_ground(a, b, "operator-");
  return subset_mask(a.bits & ~b.bits, a.ground);
}

/// Inclusion-order relation between two subsets of the same ground.
enum class set_relation { equal, less, greater, incomparable };

inline set_relation compare_sets(const subset_mask& a, const subset_mask& b) {
  detail::check_same_ground(a, b, "compare_sets");
  if (a.bits == b.bits) return set_relation::equal;
  if ((a.bits & b.bits) == a.bits) return set_relation::less;
  if ((a.bits & b.bits) == b.bits) return set_relation::greater;
  return set_relation::incomparable;
}

inline std::string to_string(set_relation r) {
  switch (r) {
    case set_relation::equal: return "equal";
    case set_relation::less: return "less";
    case set_relation::greater: return "greater";
    case set_relation::incomparable: return "incomparable";
  }
  return "?";
}

/// The initial segment {0,...,alpha-1}, the finite stand-in for the
/// ordinal alpha viewed as the set of its predecessors.
inline subset_mask initial_segment(int alpha, int n) {
  detail::check_ground(n, "initial_segment");
  if (alpha < 0 || alpha > n) {
    throw usage_error("initial_segment: index " + std::to_string(alpha) +
                      " outside [0, " + std::to_string(n) + "]");
  }
  return subset_mask(alpha == 0 ? 0 : ~std::uint64_t{0} >> (64 - alpha), n);
}

/// Renders a raw bit pattern as brace notation, e.g. "{0,2}" or "{}".
inline std::string set_braces(std::uint64_t bits) {
  std::string out = "{";
  bool first = true;
  for (std::uint64_t b = bits; b != 0; b &= b - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(b));
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace cutsets
