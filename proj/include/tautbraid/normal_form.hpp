#pragma once

// Normal form, classification and genus of positive 3-braid knots.
//
// A positive 3-braid whose closure is a knot is rewritten, by cyclic
// rotation, the braid relation s1 s2 s1 = s2 s1 s2 and destabilization, into
//
//     s1^a_1 s2^b_1 s1^a_2 s2^b_2 ... s1^a_k s2^b_k,   a_i >= 2, b_i >= 1,
//
// or, when the word collapses onto two strands, into s1^n (a torus knot
// T(2,n)) or the unknot.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautbraid/braid.hpp"

namespace tautbraid {

struct Block {
  int a = 2;  ///< power of s1
  int b = 1;  ///< power of s2
  bool operator==(const Block&) const = default;
  auto operator<=>(const Block&) const = default;
};

struct NormalizedThreeBraid {
  enum class Kind { Blocks, ReducedTorus, Unknot };
  Kind kind = Kind::Unknot;
  std::vector<Block> blocks;  ///< Kind::Blocks only
  int torus_n = 0;            ///< Kind::ReducedTorus only

  static NormalizedThreeBraid from_blocks(std::vector<Block> blocks) {
    for (const Block& bl : blocks)
      if (bl.a < 2 || bl.b < 1) throw Error(ErrorKind::Range, "blocks need a_i >= 2 and b_i >= 1");
    if (blocks.empty()) throw Error(ErrorKind::Range, "block list is empty");
    NormalizedThreeBraid n;
    n.kind = Kind::Blocks;
    n.blocks = std::move(blocks);
    return n;
  }
  static NormalizedThreeBraid reduced_torus(int n) {
    if (n < 3 || n % 2 == 0) throw Error(ErrorKind::Range, "reduced torus exponent must be odd and >= 3");
    NormalizedThreeBraid out;
    out.kind = Kind::ReducedTorus;
    out.torus_n = n;
    return out;
  }
  static NormalizedThreeBraid unknot() { return {}; }

  int c1() const {
    int s = 0;
    for (const Block& bl : blocks) s += bl.a;
    return s;
  }
  int c2() const {
    int s = 0;
    for (const Block& bl : blocks) s += bl.b;
    return s;
  }

  /// The braid word the surface is built from: 3 strands for blocks, the
  /// destabilized 2-strand word s1^n for torus knots, s1 on 2 strands for the unknot.
  BraidWord word() const {
    BraidWord w;
    switch (kind) {
      case Kind::Blocks:
        w.strand_count = 3;
        for (const Block& bl : blocks) {
          w.letters.insert(w.letters.end(), static_cast<std::size_t>(bl.a), 1);
          w.letters.insert(w.letters.end(), static_cast<std::size_t>(bl.b), 2);
        }
        break;
      case Kind::ReducedTorus:
        w.strand_count = 2;
        w.letters.assign(static_cast<std::size_t>(torus_n), 1);
        break;
      case Kind::Unknot:
        w.strand_count = 2;
        w.letters = {1};
        break;
    }
    return w;
  }

  bool operator==(const NormalizedThreeBraid&) const = default;
};

inline std::string to_string(const NormalizedThreeBraid& n) {
  switch (n.kind) {
    case NormalizedThreeBraid::Kind::Blocks: {
      std::string s = "[";
      for (std::size_t i = 0; i < n.blocks.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(n.blocks[i].a) + "," + std::to_string(n.blocks[i].b) + ")";
      }
      return s + "]";
    }
    case NormalizedThreeBraid::Kind::ReducedTorus:
      return "T(2," + std::to_string(n.torus_n) + ")";
    case NormalizedThreeBraid::Kind::Unknot:
      return "unknot";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Rewriting moves

enum class MoveKind { RotateLeft, RotateRight, BraidRelation, Destabilize };

struct Move {
  MoveKind kind = MoveKind::RotateLeft;
  int position = 0;  ///< letter index for BraidRelation; removed generator for Destabilize
  bool operator==(const Move&) const = default;
};

inline std::string to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::RotateLeft: return "rotate-left";
    case MoveKind::RotateRight: return "rotate-right";
    case MoveKind::BraidRelation: return "braid-relation@" + std::to_string(m.position + 1);
    case MoveKind::Destabilize: return "destabilize-s" + std::to_string(m.position);
  }
  return {};
}

/// A state of the search: strand_count 1 with no letters is the unknot.
struct WordState {
  int strand_count = 3;
  std::vector<int> letters;
  auto operator<=>(const WordState&) const = default;
};

inline std::optional<WordState> apply_move(const WordState& s, const Move& m) {
  WordState out = s;
  auto& L = out.letters;
  switch (m.kind) {
    case MoveKind::RotateLeft:
      if (L.size() < 2) return std::nullopt;
      std::rotate(L.begin(), L.begin() + 1, L.end());
      return out;
    case MoveKind::RotateRight:
      if (L.size() < 2) return std::nullopt;
      std::rotate(L.rbegin(), L.rbegin() + 1, L.rend());
      return out;
    case MoveKind::BraidRelation: {
      auto i = static_cast<std::size_t>(m.position);
      if (i + 2 >= L.size()) return std::nullopt;
      int x = L[i], y = L[i + 1];
      if (L[i + 2] != x || std::abs(x - y) != 1) return std::nullopt;
      L[i] = y;
      L[i + 1] = x;
      L[i + 2] = y;
      return out;
    }
    case MoveKind::Destabilize: {
      // Only the outermost generator s_{n-1}, or s_1 with relabelling, may be
      // removed, and only when it occurs exactly once.
      int g = m.position;
      if (g != 1 && g != s.strand_count - 1) return std::nullopt;
      if (std::count(L.begin(), L.end(), g) != 1) return std::nullopt;
      L.erase(std::find(L.begin(), L.end(), g));
      if (g == 1)
        for (int& x : L) --x;
      out.strand_count = s.strand_count - 1;
      return out;
    }
  }
  return std::nullopt;
}

inline std::vector<Move> candidate_moves(const WordState& s) {
  std::vector<Move> moves;
  if (s.letters.size() >= 2) {
    moves.push_back({MoveKind::RotateLeft, 0});
    moves.push_back({MoveKind::RotateRight, 0});
  }
  for (std::size_t i = 0; i + 2 < s.letters.size(); ++i) {
    int x = s.letters[i], y = s.letters[i + 1];
    if (s.letters[i + 2] == x && std::abs(x - y) == 1) moves.push_back({MoveKind::BraidRelation, static_cast<int>(i)});
  }
  if (s.strand_count >= 2) {
    for (int g : {1, s.strand_count - 1})
      if (std::count(s.letters.begin(), s.letters.end(), g) == 1) {
        moves.push_back({MoveKind::Destabilize, g});
        break;
      }
  }
  return moves;
}

namespace detail {

/// Blocks of a 3-strand word whose cyclic s1-runs all have length >= 2, read
/// starting at `offset`. Requires the word to start with s1 and end with s2
/// once rotated by `offset`.
inline std::optional<std::vector<Block>> blocks_at(const std::vector<int>& L, std::size_t offset) {
  const std::size_t n = L.size();
  auto at = [&](std::size_t i) { return L[(offset + i) % n]; };
  if (at(0) != 1 || at(n - 1) != 2) return std::nullopt;
  std::vector<Block> out;
  std::size_t i = 0;
  while (i < n) {
    Block bl{0, 0};
    while (i < n && at(i) == 1) ++bl.a, ++i;
    while (i < n && at(i) == 2) ++bl.b, ++i;
    if (bl.a < 2 || bl.b < 1) return std::nullopt;
    out.push_back(bl);
  }
  return out;
}

}  // namespace detail

/// The normal form a search state represents, if it is a final state.
inline std::optional<NormalizedThreeBraid> terminal_form(const WordState& s, bool keep_rotation) {
  if (s.strand_count == 1) return NormalizedThreeBraid::unknot();
  if (s.strand_count == 2) {
    int n = static_cast<int>(s.letters.size());
    if (n >= 3 && n % 2 == 1) return NormalizedThreeBraid::reduced_torus(n);
    return std::nullopt;
  }
  if (s.strand_count != 3) return std::nullopt;
  const auto& L = s.letters;
  if (std::count(L.begin(), L.end(), 2) < 2 || std::count(L.begin(), L.end(), 1) < 2) return std::nullopt;
  if (keep_rotation) {
    if (auto b = detail::blocks_at(L, 0)) return NormalizedThreeBraid::from_blocks(*b);
    return std::nullopt;
  }
  std::optional<std::vector<Block>> best;
  for (std::size_t off = 0; off < L.size(); ++off) {
    auto b = detail::blocks_at(L, off);
    if (b && (!best || *b > *best)) best = std::move(b);
  }
  if (best) return NormalizedThreeBraid::from_blocks(*best);
  return std::nullopt;
}

struct NormalizationResult {
  NormalizedThreeBraid normal;
  std::vector<Move> moves;  ///< from the input word to the normal form
  std::vector<WordState> path;  ///< states visited, path.front() is the input
};

struct NormalizationOptions {
  int depth_bound = 0;            ///< 0: 10 * letter count
  std::size_t state_limit = 2000000;
};

/// Breadth-first search over rotations, braid relations and destabilizations.
/// An input already in block form is returned unchanged with no moves; among
/// normal forms found at the least depth the lexicographically largest block
/// sequence wins. Search exhaustion is an error.
inline NormalizationResult normalize_search(const BraidWord& braid, NormalizationOptions opt = {}) {
  validate(braid);
  if (braid.strand_count > 3) throw Error(ErrorKind::Range, "normalization needs a braid on at most 3 strands");
  if (!closure_is_knot(braid))
    throw Error(ErrorKind::NotKnot, "closure has " + std::to_string(closure_component_count(braid)) + " components");

  WordState start{braid.strand_count, braid.letters};
  const int depth_bound = opt.depth_bound > 0 ? opt.depth_bound : 10 * static_cast<int>(braid.size());

  if (auto t = terminal_form(start, true)) {
    if (!(t->kind == NormalizedThreeBraid::Kind::Blocks && t->blocks.size() == 1 && t->blocks[0].b == 1))
      return {*t, {}, {start}};
  }

  struct Parent {
    WordState from;
    Move move;
  };
  std::map<WordState, std::optional<Parent>> seen;
  seen.emplace(start, std::nullopt);
  std::vector<WordState> layer{start};

  for (int depth = 0; depth <= depth_bound && !layer.empty(); ++depth) {
    std::optional<std::pair<NormalizedThreeBraid, WordState>> best;
    for (const WordState& s : layer) {
      auto t = terminal_form(s, false);
      if (!t) continue;
      // s1^a s2 is routed through destabilization to T(2,a).
      if (t->kind == NormalizedThreeBraid::Kind::Blocks && t->blocks.size() == 1 && t->blocks[0].b == 1) continue;
      bool better = !best;
      if (best) {
        const auto& cur = best->first;
        if (t->kind != cur.kind) better = static_cast<int>(t->kind) < static_cast<int>(cur.kind);
        else if (t->kind == NormalizedThreeBraid::Kind::Blocks) better = t->blocks > cur.blocks;
      }
      if (better) best.emplace(*t, s);
    }
    if (best) {
      NormalizationResult r{best->first, {}, {}};
      WordState cur = best->second;
      while (true) {
        r.path.push_back(cur);
        const auto& p = seen.at(cur);
        if (!p) break;
        r.moves.push_back(p->move);
        cur = p->from;
      }
      std::reverse(r.moves.begin(), r.moves.end());
      std::reverse(r.path.begin(), r.path.end());
      return r;
    }
    std::vector<WordState> next;
    for (const WordState& s : layer) {
      for (const Move& m : candidate_moves(s)) {
        auto n = apply_move(s, m);
        if (!n || seen.count(*n)) continue;
        seen.emplace(*n, Parent{s, m});
        next.push_back(std::move(*n));
        if (seen.size() > opt.state_limit)
          throw Error(ErrorKind::Normalization, "normalization search exceeded its state limit");
      }
    }
    layer = std::move(next);
  }
  throw Error(ErrorKind::Normalization, "no normal form within depth " + std::to_string(depth_bound));
}

inline NormalizedThreeBraid normalize_3braid(const BraidWord& braid, NormalizationOptions opt = {}) {
  return normalize_search(braid, opt).normal;
}

// ---------------------------------------------------------------------------
// Classification

enum class BraidClass { TypeA, TypeB, TypeC, ReducedTorus, Unknot };

inline std::string to_string(BraidClass c) {
  switch (c) {
    case BraidClass::TypeA: return "TypeA";
    case BraidClass::TypeB: return "TypeB";
    case BraidClass::TypeC: return "TypeC";
    case BraidClass::ReducedTorus: return "ReducedTorus";
    case BraidClass::Unknot: return "Unknot";
  }
  return {};
}

struct Classification {
  BraidClass cls = BraidClass::Unknot;
  int rotation = 0;  ///< block rotation applied before building the Type C schema
};

/// Rotation of the block sequence used for Type C: the first rotation whose
/// leading block has b >= 2, or 0 when none exists.
/// Only the two-block case needs a rotation (putting a block with b >= 2 first).
inline int typec_rotation(const std::vector<Block>& blocks) {
  if (blocks.size() != 2) return 0;
  for (std::size_t r = 0; r < blocks.size(); ++r)
    if (blocks[r].b >= 2) return static_cast<int>(r);
  return 0;
}

inline Classification classify(const NormalizedThreeBraid& n) {
  using K = NormalizedThreeBraid::Kind;
  if (n.kind == K::Unknot) return {BraidClass::Unknot, 0};
  if (n.kind == K::ReducedTorus) return {BraidClass::ReducedTorus, 0};
  const auto& B = n.blocks;
  if (B.size() == 1) return {BraidClass::TypeA, 0};
  if (B.size() == 2 && B[0].b == 1 && B[1].b == 1) return {BraidClass::TypeB, 0};
  return {BraidClass::TypeC, typec_rotation(B)};
}

inline std::vector<Block> rotate_blocks(std::vector<Block> blocks, int r) {
  if (!blocks.empty()) std::rotate(blocks.begin(), blocks.begin() + (r % static_cast<int>(blocks.size())), blocks.end());
  return blocks;
}

// ---------------------------------------------------------------------------
// Genus

struct GenusData {
  int euler_characteristic = 1;
  int genus = 0;
  int two_g_minus_one = -1;
  bool degenerate = false;
};

inline GenusData genus_from_euler(int chi) {
  if ((1 - chi) % 2 != 0 || chi > 1) throw Error(ErrorKind::NotKnot, "Euler characteristic incompatible with a knot");
  GenusData g;
  g.euler_characteristic = chi;
  g.genus = (1 - chi) / 2;
  g.two_g_minus_one = 2 * g.genus - 1;
  return g;
}

inline GenusData genus_3braid(const NormalizedThreeBraid& n) {
  switch (n.kind) {
    case NormalizedThreeBraid::Kind::Blocks: return genus_from_euler(3 - (n.c1() + n.c2()));
    case NormalizedThreeBraid::Kind::ReducedTorus: return genus_from_euler(2 - n.torus_n);
    case NormalizedThreeBraid::Kind::Unknot: {
      GenusData g = genus_from_euler(1);
      g.degenerate = true;
      return g;
    }
  }
  return {};
}

/// Bennequin surface of a positive braid: chi = strands - letters.
inline GenusData genus_of_positive_braid(const BraidWord& b) {
  return genus_from_euler(b.strand_count - static_cast<int>(b.size()));
}

/// Closed formula g = (wt - w - t + b + 1)/2, cross-checked against
/// chi = w - ((w-1)t + b).
inline GenusData genus_1bridge(const OneBridgeBraid& p) {
  validate(p);
  const int chi = p.w - ((p.w - 1) * p.t + p.b);
  const int twice = p.w * p.t - p.w - p.t + p.b + 1;
  if (twice % 2 != 0 || !closure_is_knot(braid_of_1bridge(p)))
    throw Error(ErrorKind::NotKnot, "K(w,b,t) closure is not a knot");
  GenusData g = genus_from_euler(chi);
  if (g.genus != twice / 2) throw Error(ErrorKind::Degenerate, "genus formulas disagree");
  return g;
}

}  // namespace tautbraid
