#pragma once

// Positive braid words: parsing, strand permutations, closure components,
// and the 1-bridge braid family.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tautbraid {

enum class ErrorKind { Parse, Range, NotKnot, Normalization, Degenerate, Budget };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A positive word in the Artin generators s_1 .. s_{w-1}. Letters are stored
/// as generator indices, 1-based, in reading order (top to bottom).
struct BraidWord {
  int strand_count = 2;
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool operator==(const BraidWord&) const = default;
};

inline void validate(const BraidWord& b) {
  if (b.strand_count < 2) throw Error(ErrorKind::Range, "strand count must be at least 2");
  if (b.letters.empty()) throw Error(ErrorKind::Range, "braid word is empty");
  for (int g : b.letters)
    if (g < 1 || g > b.strand_count - 1)
      throw Error(ErrorKind::Range, "generator s" + std::to_string(g) + " out of range for w=" +
                                        std::to_string(b.strand_count));
}

namespace detail {

class BraidParser {
 public:
  explicit BraidParser(std::string_view text) : s_(text) {}

  BraidWord parse() {
    BraidWord out;
    skip_ws();
    expect('w');
    skip_ws();
    expect('=');
    skip_ws();
    out.strand_count = integer("strand count");
    skip_ws();
    expect(':');
    out.letters = sequence(false);
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    validate(out);
    return out;
  }

 private:
  std::vector<int> sequence(bool in_group) {
    std::vector<int> out;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (c == ')') {
        if (in_group) break;
        fail("unbalanced ')'");
      }
      std::vector<int> item;
      if (c == 's') {
        ++pos_;
        item.push_back(integer("generator index"));
      } else if (c == '(') {
        ++pos_;
        item = sequence(true);
        skip_ws();
        expect(')');
        if (item.empty()) fail("empty group");
      } else {
        fail("malformed token at '" + std::string(1, c) + "'");
      }
      int power = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
        power = integer("exponent");
        if (power < 1) fail("exponent must be at least 1");
      }
      for (int p = 0; p < power; ++p) out.insert(out.end(), item.begin(), item.end());
    }
    return out;
  }

  int integer(const char* what) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
    if (ec != std::errc()) fail(std::string(what) + " too large");
    return value;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: `w=<int>:` followed by tokens `s<i>` or `( ... )`, each with an
/// optional `^<k>`, k >= 1.
inline BraidWord parse_braid(std::string_view text) { return detail::BraidParser(text).parse(); }

/// Compact rendering with maximal runs collapsed, e.g. `w=3: s1^7 s2^2 s1^2 s2`.
inline std::string to_string(const BraidWord& b) {
  std::string out = "w=" + std::to_string(b.strand_count) + ":";
  for (std::size_t i = 0; i < b.letters.size();) {
    std::size_t j = i;
    while (j < b.letters.size() && b.letters[j] == b.letters[i]) ++j;
    out += " s" + std::to_string(b.letters[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// Letters act left to right on strand positions: s_g exchanges the strands
/// currently at positions g and g+1. Entry p of the result is the final
/// position (0-based) of the strand that starts at position p.
inline std::vector<int> strand_permutation(const BraidWord& b) {
  std::vector<int> at(b.strand_count);  // at[position] = strand
  std::iota(at.begin(), at.end(), 0);
  for (int g : b.letters) std::swap(at[g - 1], at[g]);
  std::vector<int> final_pos(b.strand_count);
  for (int p = 0; p < b.strand_count; ++p) final_pos[at[p]] = p;
  return final_pos;
}

/// Sorted cycle lengths of a permutation; the conjugacy-class fingerprint.
inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

inline int closure_component_count(const BraidWord& b) {
  return static_cast<int>(cycle_type(strand_permutation(b)).size());
}

inline bool closure_is_knot(const BraidWord& b) { return closure_component_count(b) == 1; }

/// K(w, b, t): closure of (s_b ... s_1)(s_{w-1} ... s_1)^t.
struct OneBridgeBraid {
  int w = 4;
  int b = 1;
  int t = 1;
};

inline void validate(const OneBridgeBraid& p) {
  if (p.w == 3) throw Error(ErrorKind::Range, "there are no 1-bridge braids with w=3");
  if (p.w < 4) throw Error(ErrorKind::Range, "1-bridge braids need w >= 4");
  if (p.b < 1 || p.b > p.w - 2) throw Error(ErrorKind::Range, "1-bridge braids need 1 <= b <= w-2");
  if (p.t < 1) throw Error(ErrorKind::Range, "1-bridge braids need t >= 1");
}

inline BraidWord braid_of_1bridge(const OneBridgeBraid& p) {
  validate(p);
  BraidWord out;
  out.strand_count = p.w;
  out.letters.reserve(static_cast<std::size_t>(p.b + (p.w - 1) * p.t));
  for (int g = p.b; g >= 1; --g) out.letters.push_back(g);
  for (int s = 0; s < p.t; ++s)
    for (int g = p.w - 1; g >= 1; --g) out.letters.push_back(g);
  return out;
}

/// Index of the horizontal slice containing letter `letter` (0-based):
/// slice 0 is the bridge subword, slices 1..t the full twists.
inline int slice_of_letter(const OneBridgeBraid& p, int letter) {
  if (letter < p.b) return 0;
  return 1 + (letter - p.b) / (p.w - 1);
}

}  // namespace tautbraid
