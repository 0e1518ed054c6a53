#ifndef CONSTEL_PERM_HPP
#define CONSTEL_PERM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "constel/errors.hpp"

namespace constel {

// Composition convention, used by every module in this library:
// products read left to right, (p * q)(x) = q(p(x)).  Points are 1-based.
inline constexpr bool kComposeLeftToRight = true;

/// A permutation of {1..d}, stored as the image sequence p(1),...,p(d).
class Perm {
public:
  /// Identity permutation on {1..degree}.
  explicit Perm(int degree) : images_(static_cast<std::size_t>(require_degree(degree))) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  /// Build from a 1-based image sequence; validates bijectivity.
  static Perm from_images(std::vector<int> images) {
    if (images.empty())
      throw Error("permutation degree must be at least 1");
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > static_cast<int>(images.size()))
        throw Error("image value out of range: " + std::to_string(v));
      if (seen[static_cast<std::size_t>(v - 1)])
        throw Error("image sequence is not a bijection: repeated value " + std::to_string(v));
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
  }

  /// Parse cycle notation, e.g. "(1 2)(3 4)".  "()" is the identity;
  /// fixed points are omitted.  Whitespace between cycles is ignored.
  static Perm parse_cycles(std::string_view text, int degree);

  /// The transposition (a b) in degree d.
  static Perm transposition(int degree, int a, int b) {
    Perm p(degree);
    if (a < 1 || a > degree || b < 1 || b > degree || a == b)
      throw Error("invalid transposition points");
    std::swap(p.images_[static_cast<std::size_t>(a - 1)],
              p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point x.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  const std::vector<int>& images() const { return images_; }

  /// Left-to-right composition: (p * q)(x) = q(p(x)).
  Perm operator*(const Perm& q) const {
    check_same_degree(q);
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[i] = q.images_[static_cast<std::size_t>(images_[i] - 1)];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return r;
  }

  /// g^-1 * p * g under the left-to-right convention; equivalently the
  /// cycles of p relabeled by g: result(g(x)) = g(p(x)).
  Perm conjugated_by(const Perm& g) const {
    check_same_degree(g);
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[static_cast<std::size_t>(g.images_[i] - 1)] =
          g.images_[static_cast<std::size_t>(images_[i] - 1)];
    return r;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// True iff exactly one 2-cycle and all other points fixed.
  bool is_transposition() const {
    int moved = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) ++moved;
    return moved == 2;
  }

  /// Number of orbits on {1..d}, fixed points included.
  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      ++count;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        j = static_cast<std::size_t>(images_[j] - 1);
      }
    }
    return count;
  }

  /// All cycles, each starting at its least element, sorted by least element.
  /// Fixed points included iff with_fixed is set.
  std::vector<std::vector<int>> cycles(bool with_fixed = false) const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<int>(j) + 1);
        j = static_cast<std::size_t>(images_[j] - 1);
      }
      if (cyc.size() > 1 || with_fixed) out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Sorted list of cycle lengths > 1 (so conjugacy class data).
  std::vector<int> cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
  }

  /// Canonical cycle notation: fixed points omitted, cycles sorted by least
  /// element, each starting at its least element.  Identity serializes as "()".
  std::string to_cycles() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ' ';
        os << c[i];
      }
      os << ')';
    }
    return os.str();
  }

  bool operator==(const Perm&) const = default;
  /// Lexicographic order on image sequences.
  auto operator<=>(const Perm& other) const {
    return std::lexicographical_compare_three_way(
        images_.begin(), images_.end(), other.images_.begin(), other.images_.end());
  }

private:
  Perm() = default;

  static int require_degree(int degree) {
    if (degree < 1) throw Error("permutation degree must be at least 1");
    return degree;
  }

  void check_same_degree(const Perm& other) const {
    if (other.images_.size() != images_.size())
      throw Error("degree mismatch: " + std::to_string(degree()) + " vs " +
                  std::to_string(other.degree()));
  }

  std::vector<int> images_;
};

inline Perm Perm::parse_cycles(std::string_view text, int degree) {
  Perm p(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty cycle notation");
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("expected point or ')' in cycle");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw ParseError("point out of range");
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " exceeds degree " +
                         std::to_string(degree));
      if (used[static_cast<std::size_t>(v - 1)])
        throw ParseError("repeated point " + std::to_string(v));
      used[static_cast<std::size_t>(v - 1)] = true;
      cyc.push_back(v);
    }
    if (cyc.empty()) {
      // "()" denotes the identity and must stand alone.
      skip_ws();
      if (any_cycle || i != text.size())
        throw ParseError("empty cycle \"()\" must stand alone");
      return p;
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      p.images_[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  if (!any_cycle) throw ParseError("no cycles found");
  return p;
}

/// Smallest subset of {1..d} containing start and closed under all
/// generators and their inverses.  Returned sorted.
inline std::vector<int> orbit_closure(std::span<const Perm> gens, int start) {
  int degree = gens.empty() ? start : gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != degree) throw Error("orbit generators have mixed degrees");
  if (start < 1 || start > degree)
    throw Error("orbit start point out of range");
  std::vector<Perm> inverses;
  inverses.reserve(gens.size());
  for (const Perm& g : gens) inverses.push_back(g.inverse());
  std::vector<bool> seen(static_cast<std::size_t>(degree) + 1, false);
  std::vector<int> frontier{start};
  seen[static_cast<std::size_t>(start)] = true;
  std::vector<int> out{start};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      for (int y : {gens[gi](x), inverses[gi](x)}) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          out.push_back(y);
          frontier.push_back(y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace constel

#endif
