#ifndef CONSTEL_HURWITZ_HPP
#define CONSTEL_HURWITZ_HPP

#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "constel/constellation.hpp"
#include "constel/errors.hpp"
#include "constel/perm.hpp"

namespace constel {

/// A word in the braid generators acting on tuples of length n: letter k
/// (1 <= k < n) is the generator at position k, letter -k its inverse.
struct BraidWord {
  std::vector<int> letters;
};

/// Parse whitespace-separated signed integers, e.g. "1 -2 3".
inline BraidWord parse_braid_word(std::string_view text) {
  BraidWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
                               text[i] == '\r'))
      ++i;
    if (i == text.size()) break;
    bool neg = false;
    if (text[i] == '-') {
      neg = true;
      ++i;
    }
    if (i == text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("braid word: expected integer");
    long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("braid letter out of range");
      ++i;
    }
    if (v == 0) throw ParseError("braid word: zero letter");
    w.letters.push_back(neg ? -static_cast<int>(v) : static_cast<int>(v));
  }
  return w;
}

/// The explicit surface-bundle tuple: 4(d-1) simple branch points, four
/// consecutive copies of (i, i+1) for each i < d.  Genus of the cover is d-1.
inline Constellation bundle_tuple(int d) {
  if (d < 2) throw Error("bundle tuple needs degree >= 2");
  Constellation c;
  c.degree = d;
  c.tuple.reserve(4 * static_cast<std::size_t>(d - 1));
  for (int i = 1; i < d; ++i) {
    Perm t = Perm::transposition(d, i, i + 1);
    for (int copy = 0; copy < 4; ++copy) c.tuple.push_back(t);
  }
  return c;
}

enum class MoveDir { forward, backward };

/// Braid-generator action at position k (1-based, k < tuple length):
///   forward:  (a, b) -> (a b a^-1, a)
///   backward: (a, b) -> (b, b^-1 a b)
/// All other entries untouched.  Preserves tuple product, degree,
/// transitivity and the multiset of cycle types.
inline Constellation hurwitz_move(const Constellation& c, int k, MoveDir dir) {
  int n = static_cast<int>(c.tuple.size());
  if (k < 1 || k >= n) throw Error("hurwitz move index out of range");
  Constellation out = c;
  const Perm& a = c.tuple[static_cast<std::size_t>(k - 1)];
  const Perm& b = c.tuple[static_cast<std::size_t>(k)];
  if (dir == MoveDir::forward) {
    out.tuple[static_cast<std::size_t>(k - 1)] = a * b * a.inverse();
    out.tuple[static_cast<std::size_t>(k)] = a;
  } else {
    out.tuple[static_cast<std::size_t>(k - 1)] = b;
    out.tuple[static_cast<std::size_t>(k)] = b.inverse() * a * b;
  }
  return out;
}

/// Apply a braid word left to right; positive letters are forward moves.
inline Constellation apply_braid_word(const Constellation& c, const BraidWord& w) {
  Constellation cur = c;
  int n = static_cast<int>(c.tuple.size());
  for (int letter : w.letters) {
    int k = letter > 0 ? letter : -letter;
    if (k < 1 || k >= n) throw Error("braid letter " + std::to_string(letter) +
                                     " out of range for tuple length " + std::to_string(n));
    cur = hurwitz_move(cur, k, letter > 0 ? MoveDir::forward : MoveDir::backward);
  }
  return cur;
}

struct OrbitSummary {
  std::size_t size = 0;
  std::vector<Constellation> representatives; // sorted, pairwise distinct canonical forms
  bool truncated = false;
};

/// Breadth-first closure of canonical_form(c) under all Hurwitz moves
/// followed by canonicalization.  Stops with truncated set once more than
/// `cap` canonical forms are seen.
inline OrbitSummary hurwitz_orbit(const Constellation& c, std::size_t cap = 1'000'000) {
  if (!validate(c).valid()) throw Error("hurwitz orbit needs a valid constellation");
  OrbitSummary summary;
  int n = static_cast<int>(c.tuple.size());
  std::set<Constellation> seen;
  std::deque<Constellation> frontier;
  Constellation root = canonical_form(c);
  seen.insert(root);
  frontier.push_back(std::move(root));
  while (!frontier.empty()) {
    Constellation cur = frontier.front();
    frontier.pop_front();
    for (int k = 1; k < n; ++k) {
      for (MoveDir dir : {MoveDir::forward, MoveDir::backward}) {
        Constellation next = canonical_form(hurwitz_move(cur, k, dir));
        if (seen.contains(next)) continue;
        if (seen.size() >= cap) {
          summary.truncated = true;
          goto done;
        }
        seen.insert(next);
        frontier.push_back(std::move(next));
      }
    }
  }
done:
  summary.size = seen.size();
  summary.representatives.assign(seen.begin(), seen.end());
  return summary;
}

struct Movie {
  std::vector<Constellation> frames; // initial tuple, then one frame per letter
  Constellation final_canonical{1, {}};
  bool closes_up = false;
};

/// The tuple movie of a braid word acting on the surface-bundle tuple:
/// every frame is a valid constellation of genus d-1, and the movie closes
/// up when the final frame is conjugate to the initial one.
inline Movie monodromy_movie(int d, const BraidWord& w) {
  Movie m;
  Constellation cur = bundle_tuple(d);
  m.frames.push_back(cur);
  for (int letter : w.letters) {
    int k = letter > 0 ? letter : -letter;
    cur = hurwitz_move(cur, k, letter > 0 ? MoveDir::forward : MoveDir::backward);
    m.frames.push_back(cur);
  }
  m.final_canonical = canonical_form(cur);
  m.closes_up = m.final_canonical == canonical_form(m.frames.front());
  return m;
}

} // namespace constel

#endif
