#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cutsets/errors.hpp"
#include "cutsets/mask.hpp"

namespace cutsets {

/// A duplicate-free collection of subsets over a fixed ground size,
/// kept strictly sorted by bit-pattern value.
class family {
 public:
  family() = default;

  family(int ground, std::vector<std::uint64_t> members) : ground_(ground), members_(std::move(members)) {
    detail::check_ground(ground_, "family");
    const std::uint64_t full = full_bits(ground_);
    for (std::uint64_t m : members_) {
      if ((m & ~full) != 0) {
        throw usage_error("family: member " + set_braces(m) + " exceeds ground of size " +
                          std::to_string(ground_));
      }
    }
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
      throw usage_error("family: duplicate member " + set_braces(*dup));
    }
  }

  int ground() const { return ground_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }

  /// Members as raw bit patterns, strictly ascending.
  const std::vector<std::uint64_t>& masks() const { return members_; }

  subset_mask member(std::size_t i) const { return subset_mask(members_.at(i), ground_); }

  bool contains(std::uint64_t bits) const {
    return std::binary_search(members_.begin(), members_.end(), bits);
  }

  bool contains(const subset_mask& s) const {
    if (s.ground != ground_) {
      throw usage_error("family::contains: mismatched grounds " + std::to_string(s.ground) +
                        " and " + std::to_string(ground_));
    }
    return contains(s.bits);
  }

  friend bool operator==(const family&, const family&) = default;

 private:
  int ground_ = 0;
  std::vector<std::uint64_t> members_;
};

// ---------------------------------------------------------------------------
// Shared text format
//
//   n=<int>
//   <space-separated decimal elements, one subset per line>
//   -            (the single token "-" denotes the empty set)
//
// Blank lines and lines starting with '#' are skipped. Serialization writes
// members in sorted order.
// ---------------------------------------------------------------------------

/// Parses one subset line ("0 2" or "-") over the given ground.
inline std::uint64_t parse_set_text(const std::string& text, int ground) {
  std::istringstream in(text);
  std::string tok;
  std::uint64_t bits = 0;
  bool any = false;
  bool dash = false;
  while (in >> tok) {
    if (tok == "-") {
      dash = true;
      any = true;
      continue;
    }
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw usage_error("set text: bad token '" + tok + "'");
    }
    if (used != tok.size()) {
      throw usage_error("set text: bad token '" + tok + "'");
    }
    detail::check_element(e, ground, "set text");
    bits |= std::uint64_t{1} << e;
    any = true;
  }
  if (!any) {
    throw usage_error("set text: empty set description (use '-' for the empty set)");
  }
  if (dash && bits != 0) {
    throw usage_error("set text: '-' mixed with elements");
  }
  return bits;
}

/// Renders one subset in the line format used by the family serialization.
inline std::string format_set_text(std::uint64_t bits) {
  if (bits == 0) return "-";
  std::string out;
  for (std::uint64_t b = bits; b != 0; b &= b - 1) {
    if (!out.empty()) out += ' ';
    out += std::to_string(std::countr_zero(b));
  }
  return out;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline family parse_family(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw parse_error("family text: missing 'n=<int>' header", 1);
  }
  line = detail::trim(line);
  if (line.rfind("n=", 0) != 0) {
    throw parse_error("family text: first line must be 'n=<int>', got '" + line + "'", 1);
  }
  int ground = 0;
  try {
    std::size_t used = 0;
    ground = std::stoi(line.substr(2), &used);
    if (used != line.size() - 2) throw std::invalid_argument(line);
  } catch (const std::exception&) {
    throw parse_error("family text: bad header '" + line + "'", 1);
  }
  if (ground < 0 || ground > max_ground) {
    throw parse_error("family text: ground size " + std::to_string(ground) + " outside [0, " +
                      std::to_string(max_ground) + "]", 1);
  }

  std::vector<std::uint64_t> members;
  std::unordered_map<std::uint64_t, int> seen;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::uint64_t bits = 0;
    try {
      bits = parse_set_text(line, ground);
    } catch (const usage_error& e) {
      throw parse_error(e.what(), lineno);
    }
    auto [it, fresh] = seen.emplace(bits, lineno);
    if (!fresh) {
      throw parse_error("family text: duplicate set " + set_braces(bits) + ", first at line " +
                        std::to_string(it->second), lineno);
    }
    members.push_back(bits);
  }
  return family(ground, std::move(members));
}

inline family parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

inline family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw usage_error("cannot open family file '" + path + "'");
  }
  return parse_family(in);
}

inline void serialize_family(const family& f, std::ostream& out) {
  out << "n=" << f.ground() << '\n';
  for (std::uint64_t m : f.masks()) {
    out << format_set_text(m) << '\n';
  }
}

inline std::string family_text(const family& f) {
  std::ostringstream out;
  serialize_family(f, out);
  return out.str();
}

inline void save_family(const family& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw usage_error("cannot write family file '" + path + "'");
  }
  serialize_family(f, out);
}

}  // namespace cutsets
