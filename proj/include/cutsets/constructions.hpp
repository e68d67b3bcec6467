#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutsets/chain.hpp"
#include "cutsets/errors.hpp"
#include "cutsets/family.hpp"
#include "cutsets/mask.hpp"

namespace cutsets {

/// Enumerating all subsets needs a 2^n pass; shared by every operation
/// that tabulates P(n).
inline constexpr int max_table_ground = 25;

namespace detail {

inline void check_table_capacity(int n, const char* where) {
  if (n > max_table_ground) {
    throw capacity_error(std::string(where) + ": ground size " + std::to_string(n) +
                         " exceeds limit " + std::to_string(max_table_ground) +
                         " (needs a 2^n table)");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The chain through an arbitrary set A
// ---------------------------------------------------------------------------

/// The saturated maximal chain through A built from A itself by removing
/// initial segments (below A) and adding them (above A):
///
///   {∅, X} ∪ {A − seg(α) : 0 ≤ α ≤ n} ∪ {A ∪ seg(α) : 0 ≤ α ≤ n}
///
/// After deduplication this is always exactly n+1 sets, saturated from
/// ∅ to X, and contains A.
inline chain lemma1_chain(const subset_mask& a) {
  const int n = a.ground;
  std::vector<std::uint64_t> sets;
  sets.reserve(2 * static_cast<std::size_t>(n) + 4);
  sets.push_back(0);
  sets.push_back(full_bits(n));
  for (int alpha = 0; alpha <= n; ++alpha) {
    const std::uint64_t seg = initial_segment(alpha, n).bits;
    sets.push_back(a.bits & ~seg);
    sets.push_back(a.bits | seg);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return chain(n, std::move(sets));
}

// ---------------------------------------------------------------------------
// Witness extraction against a family
// ---------------------------------------------------------------------------

/// Which side of A the witness set came from.
enum class witness_direction { set_union, set_minus };

inline std::string to_string(witness_direction d) {
  return d == witness_direction::set_union ? "union" : "minus";
}

/// The first member of lemma1_chain(A) found in a family: the direction,
/// the initial-segment index, and the resulting set.
struct witness_result {
  witness_direction direction = witness_direction::set_union;
  int alpha = 0;
  std::uint64_t result = 0;

  friend bool operator==(const witness_result&, const witness_result&) = default;
};

/// Scans the chain through A for a member of C, union direction first
/// with ascending alpha, then minus direction. alpha = 0 is admitted, so
/// A ∈ C yields (union, 0, A). Returns nothing iff C misses the entire
/// chain (impossible when C is a cutset).
inline std::optional<witness_result> lemma2_witness(const family& c, const subset_mask& a) {
  if (a.ground != c.ground()) {
    throw usage_error("lemma2_witness: mismatched grounds " + std::to_string(c.ground()) +
                      " and " + std::to_string(a.ground));
  }
  const int n = a.ground;
  for (int alpha = 0; alpha <= n; ++alpha) {
    const std::uint64_t candidate = a.bits | initial_segment(alpha, n).bits;
    if (c.contains(candidate)) {
      return witness_result{witness_direction::set_union, alpha, candidate};
    }
  }
  for (int alpha = 0; alpha <= n; ++alpha) {
    const std::uint64_t candidate = a.bits & ~initial_segment(alpha, n).bits;
    if (c.contains(candidate)) {
      return witness_result{witness_direction::set_minus, alpha, candidate};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The two-element minimal cutset
// ---------------------------------------------------------------------------

/// All subsets containing exactly one of two distinguished elements:
/// {S : |S ∩ {x,y}| = 1}. Family size is 2^(n-1); it is a minimal
/// non-trivial cutset.
inline family theorem3_cutset(int x, int y, int n) {
  detail::check_ground(n, "theorem3_cutset");
  if (n < 2) {
    throw usage_error("theorem3_cutset: needs ground size >= 2, got " + std::to_string(n));
  }
  detail::check_element(x, n, "theorem3_cutset");
  detail::check_element(y, n, "theorem3_cutset");
  if (x == y) {
    throw usage_error("theorem3_cutset: elements must be distinct, both are " + std::to_string(x));
  }
  detail::check_table_capacity(n, "theorem3_cutset");

  const std::uint64_t pair = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
  std::vector<std::uint64_t> members;
  members.reserve(std::size_t{1} << (n - 1));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (std::popcount(s & pair) == 1) members.push_back(s);
  }
  return family(n, std::move(members));
}

// ---------------------------------------------------------------------------
// The block-partition antichain
// ---------------------------------------------------------------------------

/// A two-level partition of the ground set into p·q blocks of size s,
/// laid out contiguously in row-major (outer, inner) order.
struct block_partition {
  int outer = 1;  // p
  int inner = 1;  // q
  int atom = 1;   // s

  block_partition(int p, int q, int s) : outer(p), inner(q), atom(s) {
    if (p < 1 || q < 1 || s < 1) {
      throw usage_error("block_partition: counts must be >= 1, got p=" + std::to_string(p) +
                        " q=" + std::to_string(q) + " s=" + std::to_string(s));
    }
    const long long total = 1LL * p * q * s;
    if (total > max_ground) {
      throw capacity_error("block_partition: p*q*s = " + std::to_string(total) +
                           " exceeds limit " + std::to_string(max_ground));
    }
  }

  int ground() const { return outer * inner * atom; }

  /// Block (a, b): the contiguous run of `atom` elements at row-major slot a*q+b.
  std::uint64_t block_bits(int a, int b) const {
    const int start = (a * inner + b) * atom;
    return (atom == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << atom) - 1)) << start;
  }
};

/// One set per function f : {0,...,p-1} -> {0,...,q-1}, each the union of
/// the chosen inner block per outer index. q^p pairwise-incomparable sets
/// of size p·s; generated in lexicographic f order.
inline family lemma3b_antichain(const block_partition& part) {
  const int p = part.outer;
  const int q = part.inner;
  std::vector<std::uint64_t> members;
  std::uint64_t total = 1;
  for (int i = 0; i < p; ++i) total *= static_cast<std::uint64_t>(q);
  members.reserve(total);

  std::vector<int> f(static_cast<std::size_t>(p), 0);
  for (;;) {
    std::uint64_t bits = 0;
    for (int a = 0; a < p; ++a) bits |= part.block_bits(a, f[static_cast<std::size_t>(a)]);
    members.push_back(bits);
    int i = p - 1;
    while (i >= 0 && f[static_cast<std::size_t>(i)] == q - 1) {
      f[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return family(part.ground(), std::move(members));
}

// ---------------------------------------------------------------------------
// The dense subset of a maximal chain
// ---------------------------------------------------------------------------

/// For each ground element x, the smallest member of M containing x.
/// Indexed by element; the image is M's set sequence minus ∅.
inline std::vector<std::uint64_t> dense_subset_of_maximal_chain(const maximal_chain& m) {
  const int n = m.ground();
  std::vector<std::uint64_t> smallest(static_cast<std::size_t>(n), 0);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) {
    bits |= std::uint64_t{1} << m.perm()[static_cast<std::size_t>(i)];
    smallest[static_cast<std::size_t>(m.perm()[static_cast<std::size_t>(i)])] = bits;
  }
  return smallest;
}

}  // namespace cutsets
