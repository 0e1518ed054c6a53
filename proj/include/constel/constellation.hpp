#ifndef CONSTEL_CONSTELLATION_HPP
#define CONSTEL_CONSTELLATION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "constel/errors.hpp"
#include "constel/perm.hpp"
#include "constel/report.hpp"

namespace constel {

/// Monodromy data of a branched cover of the sphere: a degree d and an
/// ordered tuple of permutations of {1..d} whose product (left to right)
/// is the identity.
struct Constellation {
  int degree = 1;
  std::vector<Perm> tuple;

  bool operator==(const Constellation&) const = default;

  /// Lexicographic on (degree, tuple length, concatenated image sequences).
  bool operator<(const Constellation& other) const {
    if (degree != other.degree) return degree < other.degree;
    if (tuple.size() != other.tuple.size()) return tuple.size() < other.tuple.size();
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i].images() != other.tuple[i].images())
        return tuple[i].images() < other.tuple[i].images();
    }
    return false;
  }
};

struct ValidationReport {
  bool product_is_identity = false;
  bool transitive = false;
  bool simple = false; // every entry a transposition
  int degree = 1;
  int branch_count = 0; // tuple length n
  int euler_characteristic = 2;
  std::optional<int> genus; // only when chi is even and the tuple transitive
  std::vector<std::string> messages;

  bool valid() const { return product_is_identity && transitive; }
};

/// Total branching b = sum over entries of (d - cycle_count).  Defined for
/// any tuple, valid or not.
inline int branching_total(const Constellation& c) {
  int b = 0;
  for (const Perm& s : c.tuple) b += c.degree - s.cycle_count();
  return b;
}

namespace detail {
inline int euler_formula(const Constellation& c) {
  return 2 * c.degree - branching_total(c);
}
} // namespace detail

/// Diagnose a tuple.  Never throws: malformed tuples are data to be
/// reported, not errors.
inline ValidationReport validate(const Constellation& c) {
  ValidationReport r;
  r.degree = c.degree;
  r.branch_count = static_cast<int>(c.tuple.size());
  if (c.degree < 1) {
    r.messages.push_back("degree must be at least 1");
    return r;
  }
  for (std::size_t i = 0; i < c.tuple.size(); ++i) {
    if (c.tuple[i].degree() != c.degree) {
      r.messages.push_back("entry " + std::to_string(i + 1) + " has degree " +
                           std::to_string(c.tuple[i].degree()) + ", expected " +
                           std::to_string(c.degree));
      return r;
    }
  }

  Perm product(c.degree);
  for (const Perm& s : c.tuple) product = product * s;
  r.product_is_identity = product.is_identity();
  if (!r.product_is_identity)
    r.messages.push_back("tuple product is " + product.to_cycles() +
                         ", not the identity");

  auto orbit = orbit_closure(std::span<const Perm>(c.tuple), 1);
  r.transitive = static_cast<int>(orbit.size()) == c.degree;
  if (!r.transitive) {
    std::string pts;
    for (int x : orbit) pts += (pts.empty() ? "" : " ") + std::to_string(x);
    r.messages.push_back("tuple is not transitive: orbit of 1 is {" + pts + "}");
  }

  r.simple = true; // vacuously for the empty tuple
  for (const Perm& s : c.tuple)
    if (!s.is_transposition()) r.simple = false;

  r.euler_characteristic = detail::euler_formula(c);
  if (r.transitive && r.euler_characteristic % 2 == 0)
    r.genus = (2 - r.euler_characteristic) / 2;
  if (c.degree == 1)
    r.messages.push_back("degree 1: trivial cover of the sphere; "
                         "any non-sphere leaf needs degree >= 2");
  return r;
}

/// Riemann-Hurwitz Euler characteristic chi = 2d - b of the covering
/// surface.  Requires a valid (product-identity, transitive) tuple.
inline int euler_characteristic(const Constellation& c) {
  auto r = validate(c);
  if (!r.valid())
    throw Error("constellation is not valid: " +
                (r.messages.empty() ? std::string("unknown") : r.messages.front()));
  return r.euler_characteristic;
}

/// Genus g = (2 - chi)/2 of a valid constellation.
inline int genus(const Constellation& c) {
  int chi = euler_characteristic(c);
  if (chi % 2 != 0) throw Error("odd Euler characteristic has no genus");
  return (2 - chi) / 2;
}

/// Raise degree by `units`, attaching each new sheet to `anchor` by a pair
/// of simple branch points.  Preserves product identity, transitivity and
/// genus; adds (units, 2*units) to (degree, branching_total).
inline Constellation plumb(const Constellation& c, int units, int anchor) {
  if (units < 0) throw Error("plumbing units must be nonnegative");
  if (anchor < 1 || anchor > c.degree) throw Error("plumbing anchor out of range");
  if (!validate(c).valid()) throw Error("cannot plumb an invalid constellation");
  if (units == 0) return c;

  int new_degree = c.degree + units;
  Constellation out;
  out.degree = new_degree;
  out.tuple.reserve(c.tuple.size() + 2 * static_cast<std::size_t>(units));
  for (const Perm& s : c.tuple) {
    std::vector<int> img = s.images();
    for (int x = c.degree + 1; x <= new_degree; ++x) img.push_back(x);
    out.tuple.push_back(Perm::from_images(std::move(img)));
  }
  for (int s = c.degree + 1; s <= new_degree; ++s) {
    Perm t = Perm::transposition(new_degree, anchor, s);
    out.tuple.push_back(t);
    out.tuple.push_back(t);
  }
  return out;
}

/// Lexicographically least tuple (by concatenated image sequences) among
/// all simultaneous conjugates of c; idempotent, so an orbit invariant of
/// conjugation.  Brute force over all d! relabelings.
inline Constellation canonical_form(const Constellation& c, int cap = 8) {
  if (c.degree > cap)
    throw CapExceeded("canonical form: degree " + std::to_string(c.degree) +
                      " exceeds brute-force cap " + std::to_string(cap));
  std::vector<int> relabel(static_cast<std::size_t>(c.degree));
  std::iota(relabel.begin(), relabel.end(), 1);
  std::optional<Constellation> best;
  do {
    Perm g = Perm::from_images(relabel);
    Constellation cand;
    cand.degree = c.degree;
    cand.tuple.reserve(c.tuple.size());
    for (const Perm& s : c.tuple) cand.tuple.push_back(s.conjugated_by(g));
    if (!best || cand < *best) best = std::move(cand);
  } while (std::next_permutation(relabel.begin(), relabel.end()));
  return *best;
}

/// Branch-count parity: the branch locus class is divisible by two, so a
/// valid constellation always carries an even branching total.
inline LedgerLine parity_check(const Constellation& c) {
  if (!validate(c).valid()) throw Error("parity check needs a valid constellation");
  int b = branching_total(c);
  return make_line("parity[b mod 2 = 0]", b % 2, 0,
                   "degree " + std::to_string(c.degree) + ", " +
                       std::to_string(c.tuple.size()) + " entries");
}

} // namespace constel

#endif
